#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "dea/types.hpp"

namespace dea::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense { kMinimize, kMaximize };
enum class Relation { kLe, kEq, kGe };
enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Row {
  std::vector<double> coeffs;
  Relation rel = Relation::kLe;
  double rhs = 0.0;
};

struct VarBounds {
  double lower = 0.0;
  double upper = kInf;
};

// Solver-facing problem record. Variables default to [0, +inf) bounds;
// `bounds` may be shorter than `objective`, missing entries take the default.
struct LinearProgram {
  Sense sense = Sense::kMinimize;
  std::vector<double> objective;
  std::vector<Row> rows;
  std::vector<VarBounds> bounds;

  std::size_t num_vars() const { return objective.size(); }

  void add_row(std::vector<double> coeffs, Relation rel, double rhs) {
    rows.push_back(Row{std::move(coeffs), rel, rhs});
  }

  VarBounds bound(std::size_t j) const {
    return j < bounds.size() ? bounds[j] : VarBounds{};
  }

  void set_bounds(std::size_t j, double lower, double upper) {
    if (bounds.size() <= j) bounds.resize(j + 1);
    bounds[j] = VarBounds{lower, upper};
  }
};

struct Outcome {
  Status status = Status::kInfeasible;
  double value = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> primal;  // per variable, present iff kOptimal
  std::vector<double> duals;   // per row, present iff kOptimal
  // Dual objective reconstructed from the row multipliers and reduced costs;
  // equals `value` up to the duality tolerance when kOptimal.
  double dual_value = std::numeric_limits<double>::quiet_NaN();
  std::size_t iterations = 0;
};

struct Settings {
  double feasibility_tol = 1e-9;  // on the scaled problem
  double pivot_tol = 1e-10;       // minimum acceptable pivot magnitude
  double check_tol = 1e-7;        // reported-constraint check, per 1+|rhs|
  double optimality_tol = 1e-9;   // reduced-cost threshold
  std::size_t max_iterations = 0; // 0 = scale with problem size
};

// Ill-conditioned input: every candidate pivot fell below the pivot
// tolerance after scaling, or the iteration cap was exhausted.
class NumericalBreakdown : public SolverError {
 public:
  using SolverError::SolverError;
};

class InvalidProgram : public Error {
 public:
  using Error::Error;
};

// Two-phase primal simplex on a dense tableau. Deterministic: the same
// program yields the same outcome bit for bit. Pure function; distinct
// solves may run concurrently.
Outcome solve(const LinearProgram& lp, const Settings& settings = {});

}  // namespace dea::lp
