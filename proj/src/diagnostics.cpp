#include "dea/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "dea/pps.hpp"

namespace dea::diagnostics {

namespace {

// Multiplier-set LP skeleton over variables (v_1..v_m, u_1..u_s):
//   v 1_m + u 1_s = 1, v r-_t - u r+_t >= 0 (t = 1..K), v, u >= 0.
lp::LinearProgram multiplier_lp(const Technology& tech) {
  const std::size_t m = tech.m(), s = tech.s(), k = tech.k();
  lp::LinearProgram prog;
  prog.objective.assign(m + s, 0.0);
  {
    std::vector<double> row(m + s, 1.0);
    prog.add_row(std::move(row), lp::Relation::kEq, 1.0);
  }
  for (std::size_t t = 0; t < k; ++t) {
    const TradeoffColumn& col = tech.tradeoffs().columns[t];
    std::vector<double> row(m + s, 0.0);
    for (std::size_t i = 0; i < m; ++i) row[i] = col.r_minus[i];
    for (std::size_t r = 0; r < s; ++r) row[m + r] = -col.r_plus[r];
    prog.add_row(std::move(row), lp::Relation::kGe, 0.0);
  }
  return prog;
}

}  // namespace

Report facet_positivity_check(const Technology& tech, const lp::Settings& settings) {
  const std::size_t m = tech.m(), s = tech.s();
  Report rep;
  rep.v_star.assign(m, std::nullopt);
  rep.u_star.assign(s, std::nullopt);
  bool feasible = true;
  for (std::size_t j = 0; j < m + s && feasible; ++j) {
    lp::LinearProgram prog = multiplier_lp(tech);
    prog.objective[j] = 1.0;
    prog.sense = lp::Sense::kMinimize;
    const lp::Outcome out = lp::solve(prog, settings);
    if (out.status != lp::Status::kOptimal) {
      feasible = false;
      break;
    }
    if (j < m)
      rep.v_star[j] = out.value;
    else
      rep.u_star[j - m] = out.value;
  }
  if (!feasible) {
    rep.v_star.assign(m, std::nullopt);
    rep.u_star.assign(s, std::nullopt);
    rep.facet_positivity_passed = false;
    return rep;
  }
  const double tol = settings.check_tol;
  rep.facet_positivity_passed = true;
  for (const auto& v : rep.v_star)
    if (*v <= tol) rep.facet_positivity_passed = false;
  for (const auto& u : rep.u_star)
    if (*u <= tol) rep.facet_positivity_passed = false;
  return rep;
}

Report free_lunch_check(const Technology& tech, const lp::Settings& settings) {
  Report rep = facet_positivity_check(tech, settings);
  rep.free_lunch_hypothesis_met =
      !rep.u_star.empty() &&
      std::all_of(rep.u_star.begin(), rep.u_star.end(),
                  [&](const std::optional<double>& u) {
                    return u.has_value() && *u > settings.check_tol;
                  });

  const Dataset& ds = tech.dataset();
  const std::size_t n = tech.n(), k = tech.k(), m = tech.m(), s = tech.s();

  // Primal: max sum d_r subject to (0, d) in P.
  lp::LinearProgram primal;
  const std::size_t nv = n + k + s;
  primal.objective.assign(nv, 0.0);
  for (std::size_t r = 0; r < s; ++r) primal.objective[n + k + r] = 1.0;
  primal.sense = lp::Sense::kMaximize;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> row(nv, 0.0);
    for (std::size_t j = 0; j < n; ++j) row[j] = ds.dmus[j].x[i];
    for (std::size_t t = 0; t < k; ++t) row[n + t] = tech.tradeoffs().columns[t].r_minus[i];
    primal.add_row(std::move(row), lp::Relation::kLe, 0.0);
  }
  for (std::size_t r = 0; r < s; ++r) {
    std::vector<double> row(nv, 0.0);
    for (std::size_t j = 0; j < n; ++j) row[j] = ds.dmus[j].y[r];
    for (std::size_t t = 0; t < k; ++t) row[n + t] = tech.tradeoffs().columns[t].r_plus[r];
    row[n + k + r] = -1.0;
    primal.add_row(std::move(row), lp::Relation::kGe, 0.0);
  }
  if (tech.rts() == Rts::kVrsTradeoffs) {
    std::vector<double> row(nv, 0.0);
    for (std::size_t j = 0; j < n; ++j) row[j] = 1.0;
    primal.add_row(std::move(row), lp::Relation::kEq, 1.0);
  }
  const lp::Outcome pout = lp::solve(primal, settings);

  if (pout.status == lp::Status::kInfeasible) {
    rep.has_free_lunch = false;
    return rep;
  }
  if (pout.status == lp::Status::kUnbounded) {
    rep.has_free_lunch = true;
    rep.free_lunch_unbounded = true;
    return rep;
  }
  rep.free_lunch_value = pout.value;
  rep.has_free_lunch = pout.value > settings.check_tol;
  rep.free_lunch_bundle.assign(s, 0.0);
  for (std::size_t r = 0; r < s; ++r) rep.free_lunch_bundle[r] = pout.primal[n + k + r];

  // Dual route: min -sigma s.t. v x_j - u y_j >= sigma, v R- - u R+ >= 0,
  // u >= 1, v >= 0, sigma free. Values must agree.
  lp::LinearProgram dual;
  dual.objective.assign(m + s + 1, 0.0);
  dual.objective[m + s] = -1.0;  // -sigma
  dual.sense = lp::Sense::kMinimize;
  for (std::size_t r = 0; r < s; ++r) dual.set_bounds(m + r, 1.0, lp::kInf);
  dual.set_bounds(m + s, -lp::kInf, lp::kInf);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> row(m + s + 1, 0.0);
    for (std::size_t i = 0; i < m; ++i) row[i] = ds.dmus[j].x[i];
    for (std::size_t r = 0; r < s; ++r) row[m + r] = -ds.dmus[j].y[r];
    row[m + s] = -1.0;
    dual.add_row(std::move(row), lp::Relation::kGe, 0.0);
  }
  for (std::size_t t = 0; t < k; ++t) {
    const TradeoffColumn& col = tech.tradeoffs().columns[t];
    std::vector<double> row(m + s + 1, 0.0);
    for (std::size_t i = 0; i < m; ++i) row[i] = col.r_minus[i];
    for (std::size_t r = 0; r < s; ++r) row[m + r] = -col.r_plus[r];
    dual.add_row(std::move(row), lp::Relation::kGe, 0.0);
  }
  const lp::Outcome dout = lp::solve(dual, settings);
  if (dout.status == lp::Status::kOptimal) {
    rep.free_lunch_dual_value = dout.value;
    const double gap = std::fabs(*rep.free_lunch_value - dout.value);
    if (gap > 1e-6 * (1.0 + std::fabs(*rep.free_lunch_value)))
      throw SolverError("free-lunch primal and dual values disagree");
  }
  return rep;
}

Report run_all(const Technology& tech, const lp::Settings& settings) {
  return free_lunch_check(tech, settings);
}

Feasibility tradeoff_consistency(const Dataset& dataset,
                                 const std::vector<std::pair<int, int>>& pairs,
                                 const std::vector<VuInequality>& extra,
                                 const lp::Settings& settings) {
  const std::size_t m = dataset.m, s = dataset.s;
  lp::LinearProgram prog;
  prog.objective.assign(m + s, 0.0);
  {
    std::vector<double> row(m + s, 1.0);
    prog.add_row(std::move(row), lp::Relation::kEq, 1.0);
  }
  for (const auto& [p, q] : pairs) {
    const Dmu& dp = dataset.by_id(p);
    const Dmu& dq = dataset.by_id(q);
    std::vector<double> row(m + s, 0.0);
    for (std::size_t i = 0; i < m; ++i) row[i] = dp.x[i] - dq.x[i];
    for (std::size_t r = 0; r < s; ++r) row[m + r] = -(dp.y[r] - dq.y[r]);
    prog.add_row(std::move(row), lp::Relation::kGe, 0.0);
  }
  for (const VuInequality& ineq : extra) {
    if (ineq.v.size() > m || ineq.u.size() > s)
      throw DimensionMismatch("extra inequality does not match dataset dimensions");
    std::vector<double> row(m + s, 0.0);
    for (std::size_t i = 0; i < ineq.v.size(); ++i) row[i] = ineq.v[i];
    for (std::size_t r = 0; r < ineq.u.size(); ++r) row[m + r] = ineq.u[r];
    prog.add_row(std::move(row), lp::Relation::kGe, ineq.rhs);
  }
  const lp::Outcome out = lp::solve(prog, settings);
  return out.status == lp::Status::kOptimal ? Feasibility::kFeasible
                                            : Feasibility::kInfeasible;
}

std::vector<int> strong_efficient_set(const Technology& tech,
                                      const lp::Settings& settings, double tol) {
  const Dataset& ds = tech.dataset();
  const std::size_t m = tech.m(), s = tech.s();
  // Slacks are classified in row-equilibrated units so the zero threshold is
  // insensitive to the measurement scale of each coordinate.
  std::vector<double> in_scale(m, 1.0), out_scale(s, 1.0);
  for (std::size_t i = 0; i < m; ++i) {
    double mx = 0.0;
    for (const Dmu& d : ds.dmus) mx = std::max(mx, d.x[i]);
    if (mx > 0.0) in_scale[i] = mx;
  }
  for (std::size_t r = 0; r < s; ++r) {
    double mx = 0.0;
    for (const Dmu& d : ds.dmus) mx = std::max(mx, d.y[r]);
    if (mx > 0.0) out_scale[r] = mx;
  }
  std::vector<int> ids;
  for (const Dmu& dmu : ds.dmus) {
    const double slack =
        pps::additive_inefficiency(tech, dmu.x, dmu.y, settings, in_scale, out_scale);
    if (slack <= tol) ids.push_back(dmu.id);
  }
  return ids;
}

}  // namespace dea::diagnostics
