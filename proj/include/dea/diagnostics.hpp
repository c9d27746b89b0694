#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dea/lp.hpp"
#include "dea/types.hpp"

namespace dea::diagnostics {

struct Report {
  // Minimum attainable v_i / u_r over the normalized multiplier set
  // {v 1 + u 1 = 1, v R- - u R+ >= 0, v,u >= 0}; empty optionals when that
  // set itself is infeasible.
  std::vector<std::optional<double>> v_star;
  std::vector<std::optional<double>> u_star;
  bool facet_positivity_passed = false;

  std::optional<double> free_lunch_value;  // empty: free-lunch LP infeasible
  bool has_free_lunch = false;
  bool free_lunch_unbounded = false;
  bool free_lunch_hypothesis_met = false;  // all u_r* > 0 (Theorem hypothesis)
  std::optional<double> free_lunch_dual_value;
  std::vector<double> free_lunch_bundle;  // optimal output bundle d, if any
};

// Sufficient condition for the strong and weak frontiers of P to coincide:
// every v_i* and u_r* strictly positive. Solves m + s LPs.
Report facet_positivity_check(const Technology& tech,
                              const lp::Settings& settings = {});

// Detects output bundles producible from zero input. Solves the primal
// free-lunch LP and its dual and requires their values to agree.
Report free_lunch_check(const Technology& tech, const lp::Settings& settings = {});

// Both checks in one report.
Report run_all(const Technology& tech, const lp::Settings& settings = {});

enum class Feasibility { kFeasible, kInfeasible };

// Extra multiplier restriction: sum_i v[i] v_i + sum_r u[r] u_r >= rhs.
struct VuInequality {
  std::vector<double> v;
  std::vector<double> u;
  double rhs = 0.0;
};

// Feasibility of the trade-off consistency system
//   v (x_p - x_q) - u (y_p - y_q) >= 0 for every listed pair,
//   sum v + sum u = 1, v >= 0, u >= 0, plus any extra inequalities.
Feasibility tradeoff_consistency(const Dataset& dataset,
                                 const std::vector<std::pair<int, int>>& pairs,
                                 const std::vector<VuInequality>& extra = {},
                                 const lp::Settings& settings = {});

// Ids of DMUs on the strongly efficient frontier: total one-sided slack,
// measured relative to the data row maxima, at most `tol`.
std::vector<int> strong_efficient_set(const Technology& tech,
                                      const lp::Settings& settings = {},
                                      double tol = 1e-6);

}  // namespace dea::diagnostics
