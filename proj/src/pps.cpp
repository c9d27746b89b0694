#include "dea/pps.hpp"

#include <algorithm>
#include <cmath>

namespace dea::pps {

namespace {

void check_dims(const Technology& tech, const std::vector<double>& x,
                const std::vector<double>& y) {
  if (x.size() != tech.m() || y.size() != tech.s())
    throw DimensionMismatch("point dimensions do not match the technology");
}

bool any_positive(const std::vector<double>& v) {
  return std::any_of(v.begin(), v.end(), [](double e) { return e > 0.0; });
}

bool all_nonnegative(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double e) { return e >= 0.0; });
}

}  // namespace

EnvelopmentLp envelopment_lp(const Technology& tech, const std::vector<double>& x,
                             const std::vector<double>& y) {
  check_dims(tech, x, y);
  const Dataset& ds = tech.dataset();
  const std::size_t n = tech.n(), k = tech.k(), m = tech.m(), s = tech.s();

  EnvelopmentLp e;
  e.lambda_start = 0;
  e.pi_start = n;
  e.num_fixed = n + k;
  e.prog.objective.assign(e.num_fixed, 0.0);

  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> row(e.num_fixed, 0.0);
    for (std::size_t j = 0; j < n; ++j) row[j] = ds.dmus[j].x[i];
    for (std::size_t t = 0; t < k; ++t)
      row[e.pi_start + t] = tech.tradeoffs().columns[t].r_minus[i];
    e.prog.add_row(std::move(row), lp::Relation::kLe, x[i]);
  }
  for (std::size_t r = 0; r < s; ++r) {
    std::vector<double> row(e.num_fixed, 0.0);
    for (std::size_t j = 0; j < n; ++j) row[j] = ds.dmus[j].y[r];
    for (std::size_t t = 0; t < k; ++t)
      row[e.pi_start + t] = tech.tradeoffs().columns[t].r_plus[r];
    e.prog.add_row(std::move(row), lp::Relation::kGe, y[r]);
  }
  if (tech.rts() == Rts::kVrsTradeoffs) {
    std::vector<double> row(e.num_fixed, 0.0);
    for (std::size_t j = 0; j < n; ++j) row[j] = 1.0;
    e.prog.add_row(std::move(row), lp::Relation::kEq, 1.0);
  }
  return e;
}

std::size_t add_variable(EnvelopmentLp& e, double objective, double lower, double upper) {
  const std::size_t col = e.prog.objective.size();
  e.prog.objective.push_back(objective);
  for (auto& row : e.prog.rows) row.coeffs.push_back(0.0);
  e.prog.set_bounds(col, lower, upper);
  return col;
}

bool membership(const Technology& tech, const std::vector<double>& x,
                const std::vector<double>& y, const lp::Settings& settings) {
  check_dims(tech, x, y);
  // Orthant intersection: the LP block describes the superset P, not T.
  if (!all_nonnegative(x) || !all_nonnegative(y)) return false;
  if (tech.rts() == Rts::kVrsTradeoffs) {
    if (!any_positive(y)) return false;
  } else {
    if (!any_positive(x)) return false;
  }
  EnvelopmentLp e = envelopment_lp(tech, x, y);
  const lp::Outcome out = lp::solve(e.prog, settings);
  return out.status == lp::Status::kOptimal;
}

double max_output_expansion(const Technology& tech, const std::vector<double>& x,
                            const std::vector<double>& y, std::size_t r,
                            const lp::Settings& settings) {
  check_dims(tech, x, y);
  if (r >= tech.s() || y[r] <= 0.0)
    throw ZeroOutputIndex("output expansion requires y_r > 0");
  EnvelopmentLp e = envelopment_lp(tech, x, y);
  const std::size_t phi = add_variable(e, 1.0, 1.0, lp::kInf);
  // Move phi*y_r to the left-hand side of output row r.
  auto& row = e.prog.rows[e.output_row(tech.m(), r)];
  row.coeffs[phi] = -y[r];
  row.rhs = 0.0;
  e.prog.sense = lp::Sense::kMaximize;
  const lp::Outcome out = lp::solve(e.prog, settings);
  if (out.status == lp::Status::kUnbounded)
    throw UnboundedExpansion("output " + std::to_string(r + 1) +
                             " can expand without bound; the frontier assumption fails");
  if (out.status != lp::Status::kOptimal)
    throw SolverError("expansion LP infeasible: the assessed point is outside the technology");
  return out.primal[phi];
}

double min_input_contraction(const Technology& tech, const std::vector<double>& x,
                             const std::vector<double>& y, std::size_t i,
                             const lp::Settings& settings) {
  check_dims(tech, x, y);
  if (i >= tech.m() || x[i] <= 0.0)
    throw ZeroInputIndex("input contraction requires x_i > 0");
  EnvelopmentLp e = envelopment_lp(tech, x, y);
  const std::size_t theta = add_variable(e, 1.0, 0.0, 1.0);
  auto& row = e.prog.rows[e.input_row(i)];
  row.coeffs[theta] = -x[i];
  row.rhs = 0.0;
  e.prog.sense = lp::Sense::kMinimize;
  const lp::Outcome out = lp::solve(e.prog, settings);
  if (out.status != lp::Status::kOptimal)
    throw SolverError("contraction LP infeasible: the assessed point is outside the technology");
  return out.primal[theta];
}

double additive_inefficiency(const Technology& tech, const std::vector<double>& x,
                             const std::vector<double>& y, const lp::Settings& settings,
                             const std::vector<double>& input_scale,
                             const std::vector<double>& output_scale) {
  check_dims(tech, x, y);
  const std::size_t m = tech.m(), s = tech.s();
  EnvelopmentLp e = envelopment_lp(tech, x, y);
  for (std::size_t i = 0; i < m; ++i) {
    const double w = input_scale.empty() ? 1.0 : 1.0 / input_scale[i];
    // eps-_i with 0 <= eps- <= x_i keeps the improved input nonnegative.
    const std::size_t col = add_variable(e, w, 0.0, x[i]);
    e.prog.rows[e.input_row(i)].coeffs[col] = 1.0;
  }
  for (std::size_t r = 0; r < s; ++r) {
    const double w = output_scale.empty() ? 1.0 : 1.0 / output_scale[r];
    const std::size_t col = add_variable(e, w, 0.0, lp::kInf);
    e.prog.rows[e.output_row(m, r)].coeffs[col] = -1.0;
  }
  e.prog.sense = lp::Sense::kMaximize;
  const lp::Outcome out = lp::solve(e.prog, settings);
  if (out.status == lp::Status::kUnbounded)
    throw UnboundedInefficiency("additive improvement is unbounded over this technology");
  if (out.status != lp::Status::kOptimal)
    throw SolverError("additive LP infeasible: the assessed point is outside the technology");
  return out.value;
}

}  // namespace dea::pps
