#pragma once

#include <cstddef>
#include <vector>

#include "dea/lp.hpp"
#include "dea/types.hpp"

namespace dea::pps {

class UnboundedExpansion : public SolverError {
 public:
  using SolverError::SolverError;
};
class ZeroOutputIndex : public DataError {
 public:
  using DataError::DataError;
};
class ZeroInputIndex : public DataError {
 public:
  using DataError::DataError;
};
// Additive improvement has no finite maximum: free disposability pathology.
class UnboundedInefficiency : public SolverError {
 public:
  using SolverError::SolverError;
};

// Envelopment block shared by every model: variables lambda_1..lambda_n then
// pi_1..pi_K, rows input_1..input_m (<=), output_1..output_s (>=) and, under
// VRS, the convexity row sum(lambda) = 1. Callers append their own variables
// and adjust coefficients before solving.
struct EnvelopmentLp {
  lp::LinearProgram prog;
  std::size_t lambda_start = 0;
  std::size_t pi_start = 0;
  std::size_t num_fixed = 0;  // lambda + pi column count

  std::size_t input_row(std::size_t i) const { return i; }
  std::size_t output_row(std::size_t m, std::size_t r) const { return m + r; }
};

// Builds the block with right-hand sides x and y (the assessed point).
EnvelopmentLp envelopment_lp(const Technology& tech, const std::vector<double>& x,
                             const std::vector<double>& y);

// Appends one variable with the given objective coefficient and bounds,
// returning its column index.
std::size_t add_variable(EnvelopmentLp& e, double objective, double lower, double upper);

// True iff (x, y) belongs to the technology: the envelopment LP is feasible
// and the sign conditions of the regime's orthant intersection hold.
bool membership(const Technology& tech, const std::vector<double>& x,
                const std::vector<double>& y, const lp::Settings& settings = {});

// max{phi_r : (x, phi (x) y) in T, phi_q = 1 for q != r}; at least 1.
double max_output_expansion(const Technology& tech, const std::vector<double>& x,
                            const std::vector<double>& y, std::size_t r,
                            const lp::Settings& settings = {});

// min{theta_i : (theta (x) x, y) in T, theta_q = 1 for q != i}; in [0, 1].
double min_input_contraction(const Technology& tech, const std::vector<double>& x,
                             const std::vector<double>& y, std::size_t i,
                             const lp::Settings& settings = {});

// max{sum eps- + sum eps+ : (x - eps-, y + eps+) in T, eps >= 0}. Zero
// exactly on the strongly efficient frontier. `objective_scale` divides the
// slack of each coordinate (unit weights when empty); classification against
// a units-free threshold passes scales derived from the data row maxima.
double additive_inefficiency(const Technology& tech, const std::vector<double>& x,
                             const std::vector<double>& y,
                             const lp::Settings& settings = {},
                             const std::vector<double>& input_scale = {},
                             const std::vector<double>& output_scale = {});

}  // namespace dea::pps
