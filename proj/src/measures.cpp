#include "dea/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dea::measures {

namespace {

constexpr double kGapTol = 1e-7;        // cutting-plane stopping gap
constexpr std::size_t kMaxCuts = 100;   // cutting-plane iteration cap
constexpr double kSideTie = 1e-9;       // input/output side tie window
constexpr double kEfficientTol = 1e-7;  // |score - 1| below this => efficient
constexpr double kZeroTargetTol = 1e-6; // zero-input optimum equality probe

MaxRgmResult max_rgm_impl(const Technology& tech, const std::vector<double>& x,
                          const std::vector<double>& y, const lp::Settings& settings) {
  const double ms = static_cast<double>(tech.m() + tech.s());
  const IndexSets sets = index_sets(x, y);
  if (sets.positive_outputs.empty())
    throw NotInTechnology("assessed point has no positive output");

  MaxRgmResult res;
  for (std::size_t r : sets.positive_outputs) {
    try {
      res.output_phi[r] = pps::max_output_expansion(tech, x, y, r, settings);
    } catch (const pps::UnboundedExpansion& e) {
      throw AssumptionViolated(e.what());
    }
  }
  // Exact extrema; the tie window applies only to coordinate selection so
  // that recomputing the score from the per-coordinate values is exact.
  res.phi_star = lp::kInf;
  for (const auto& [r, v] : res.output_phi) res.phi_star = std::min(res.phi_star, v);
  std::size_t r_star = 0;
  for (const auto& [r, v] : res.output_phi)
    if (v <= res.phi_star + kSideTie) {
      r_star = r;
      break;
    }

  std::size_t i_star = 0;
  if (sets.positive_inputs.empty()) {
    res.theta_star = 1.0 / res.phi_star;
  } else {
    for (std::size_t i : sets.positive_inputs)
      res.input_theta[i] = pps::min_input_contraction(tech, x, y, i, settings);
    res.theta_star = -lp::kInf;
    for (const auto& [i, v] : res.input_theta)
      res.theta_star = std::max(res.theta_star, v);
    for (const auto& [i, v] : res.input_theta)
      if (v >= res.theta_star - kSideTie) {
        i_star = i;
        break;
      }
  }

  const double score_in = (ms - 1.0 + res.theta_star) / ms;
  const double score_out = (ms - 1.0 + 1.0 / res.phi_star) / ms;
  res.score = std::max(score_in, score_out);
  res.target_x = x;
  res.target_y = y;
  if (res.score >= 1.0 - kEfficientTol) {
    res.side = Side::kEfficient;
  } else if (score_out >= score_in - kSideTie || sets.positive_inputs.empty()) {
    res.side = Side::kOutput;
    res.coordinate = r_star;
    res.target_y[r_star] = res.phi_star * y[r_star];
  } else {
    res.side = Side::kInput;
    res.coordinate = i_star;
    res.target_x[i_star] = res.theta_star * x[i_star];
  }
  return res;
}

}  // namespace

MaxRgmResult max_rgm(const Technology& tech, const Dmu& dmu,
                     const lp::Settings& settings) {
  // Observed units belong to the technology by construction (lambda_j = 1).
  return max_rgm_impl(tech, dmu.x, dmu.y, settings);
}

MaxRgmResult max_rgm_point(const Technology& tech, const std::vector<double>& x,
                           const std::vector<double>& y, const lp::Settings& settings) {
  if (!pps::membership(tech, x, y, settings))
    throw NotInTechnology("assessed point lies outside the technology");
  return max_rgm_impl(tech, x, y, settings);
}

int psi(const Technology& tech, const Dmu& dmu, std::size_t r,
        const lp::Settings& settings) {
  if (r >= tech.s()) throw DimensionMismatch("psi: output index out of range");
  if (dmu.y[r] > 0.0) return 1;
  pps::EnvelopmentLp e = pps::envelopment_lp(tech, dmu.x, dmu.y);
  const std::size_t d = pps::add_variable(e, 1.0, 0.0, lp::kInf);
  auto& row = e.prog.rows[e.output_row(tech.m(), r)];
  row.coeffs[d] = -1.0;
  e.prog.sense = lp::Sense::kMaximize;
  const lp::Outcome out = lp::solve(e.prog, settings);
  if (out.status == lp::Status::kUnbounded) return 1;
  if (out.status != lp::Status::kOptimal)
    throw SolverError("psi probe LP infeasible for an observed DMU");
  return out.value > settings.feasibility_tol ? 1 : 0;
}

namespace {

struct CutProblem {
  lp::LinearProgram prog;
  std::vector<std::size_t> theta_col;       // parallel to active_inputs
  std::vector<std::size_t> phi_col, t_col;  // parallel to positive_outputs
  std::vector<std::size_t> active_inputs;
  std::vector<std::size_t> positive_outputs;
};

// min sum theta_i + sum t_r over the envelopment block, with t_r an epigraph
// variable for 1/phi_r tied down by tangent cuts.
CutProblem build_cut_problem(const Technology& tech, const std::vector<double>& x,
                             const std::vector<double>& y,
                             const std::vector<double>& phi_cap,
                             bool pin_theta_to_zero) {
  const IndexSets sets = index_sets(x, y);
  CutProblem cp;
  cp.active_inputs = sets.positive_inputs;
  cp.positive_outputs = sets.positive_outputs;
  pps::EnvelopmentLp e = pps::envelopment_lp(tech, x, y);
  for (std::size_t i : cp.active_inputs) {
    const double hi = pin_theta_to_zero ? 0.0 : 1.0;
    const std::size_t col = pps::add_variable(e, 1.0, 0.0, hi);
    e.prog.rows[e.input_row(i)].coeffs[col] = -x[i];
    e.prog.rows[e.input_row(i)].rhs = 0.0;
    cp.theta_col.push_back(col);
  }
  for (std::size_t idx = 0; idx < cp.positive_outputs.size(); ++idx) {
    const std::size_t r = cp.positive_outputs[idx];
    const std::size_t pcol = pps::add_variable(e, 0.0, 1.0, phi_cap[idx]);
    e.prog.rows[e.output_row(tech.m(), r)].coeffs[pcol] = -y[r];
    e.prog.rows[e.output_row(tech.m(), r)].rhs = 0.0;
    cp.phi_col.push_back(pcol);
    cp.t_col.push_back(pps::add_variable(e, 1.0, 0.0, 1.0));
  }
  e.prog.sense = lp::Sense::kMinimize;
  cp.prog = std::move(e.prog);
  return cp;
}

void add_tangent_cut(CutProblem& cp, std::size_t idx, double phi_hat) {
  // 1/phi >= 2/phi_hat - phi/phi_hat^2, tangent at phi_hat.
  std::vector<double> row(cp.prog.num_vars(), 0.0);
  row[cp.t_col[idx]] = 1.0;
  row[cp.phi_col[idx]] = 1.0 / (phi_hat * phi_hat);
  cp.prog.add_row(std::move(row), lp::Relation::kGe, 2.0 / phi_hat);
}

struct CutSolution {
  bool feasible = false;
  bool converged = false;
  double gap = 0.0;
  double objective = 0.0;  // sum theta + sum 1/phi at the final iterate
  std::vector<double> theta_values;
  std::vector<double> phi_values;
  lp::Outcome last;
};

CutSolution run_cutting_planes(CutProblem& cp, const lp::Settings& settings) {
  CutSolution sol;
  for (std::size_t iter = 0; iter < kMaxCuts; ++iter) {
    const lp::Outcome out = lp::solve(cp.prog, settings);
    if (out.status == lp::Status::kInfeasible) return sol;
    if (out.status == lp::Status::kUnbounded)
      throw SolverError("cutting-plane relaxation unbounded");
    sol.feasible = true;
    sol.gap = 0.0;
    std::size_t worst = 0;
    for (std::size_t idx = 0; idx < cp.phi_col.size(); ++idx) {
      const double gap_r = 1.0 / out.primal[cp.phi_col[idx]] - out.primal[cp.t_col[idx]];
      if (gap_r > sol.gap) {
        sol.gap = gap_r;
        worst = idx;
      }
    }
    sol.theta_values.clear();
    for (std::size_t col : cp.theta_col) sol.theta_values.push_back(out.primal[col]);
    sol.phi_values.clear();
    for (std::size_t col : cp.phi_col) sol.phi_values.push_back(out.primal[col]);
    sol.objective = 0.0;
    for (double th : sol.theta_values) sol.objective += th;
    for (double ph : sol.phi_values) sol.objective += 1.0 / ph;
    sol.last = out;
    if (sol.gap < kGapTol) {
      sol.converged = true;
      return sol;
    }
    (void)worst;
    for (std::size_t idx = 0; idx < cp.phi_col.size(); ++idx) {
      const double gap_r = 1.0 / out.primal[cp.phi_col[idx]] - out.primal[cp.t_col[idx]];
      if (gap_r >= kGapTol) add_tangent_cut(cp, idx, out.primal[cp.phi_col[idx]]);
    }
  }
  return sol;
}

}  // namespace

FglResult fgl(const Technology& tech, const Dmu& dmu, FglVariant variant,
              const lp::Settings& settings) {
  const std::size_t m = tech.m(), s = tech.s();
  const IndexSets sets = index_sets(dmu);
  if (variant == FglVariant::kRussell &&
      (sets.positive_inputs.size() != m || sets.positive_outputs.size() != s))
    throw NoOptimum(
        "the Russell graph minimization has no optimal solution on data with zeros");

  FglResult res;
  // Output activity weights; inputs are active exactly on I+(x) in every
  // variant (delta(0) = 0 and the Russell variant excludes zero data).
  std::vector<int> weight(s, 0);
  for (std::size_t r = 0; r < s; ++r) {
    if (dmu.y[r] > 0.0)
      weight[r] = 1;
    else if (variant == FglVariant::kModified)
      weight[r] = psi(tech, dmu, r, settings);
  }
  if (variant == FglVariant::kModified) res.psi = weight;
  double denom = static_cast<double>(sets.positive_inputs.size());
  for (std::size_t r = 0; r < s; ++r) denom += weight[r];
  for (std::size_t r = 0; r < s; ++r)
    if (weight[r] == 1 && dmu.y[r] == 0.0) res.infimum_only = true;

  // Single-coordinate expansion bounds double as phi upper bounds and as the
  // far-end tangent seeds.
  std::vector<double> phi_cap;
  for (std::size_t r : sets.positive_outputs)
    phi_cap.push_back(pps::max_output_expansion(tech, dmu.x, dmu.y, r, settings));

  CutProblem cp = build_cut_problem(tech, dmu.x, dmu.y, phi_cap, false);
  for (std::size_t idx = 0; idx < cp.phi_col.size(); ++idx) {
    add_tangent_cut(cp, idx, 1.0);
    if (phi_cap[idx] > 1.0 + 1e-12) add_tangent_cut(cp, idx, phi_cap[idx]);
  }
  CutSolution sol = run_cutting_planes(cp, settings);
  if (!sol.feasible)
    throw SolverError("FGL LP infeasible for an observed DMU");
  if (!sol.converged)
    throw NotConverged("FGL cutting planes left gap " + std::to_string(sol.gap) +
                       " after " + std::to_string(kMaxCuts) + " iterations");

  res.converged = true;
  res.gap = sol.gap;
  res.score = sol.objective / denom;
  res.theta.assign(m, 1.0);
  for (std::size_t idx = 0; idx < cp.active_inputs.size(); ++idx)
    res.theta[cp.active_inputs[idx]] = sol.theta_values[idx];
  res.phi.assign(s, 1.0);
  for (std::size_t idx = 0; idx < cp.positive_outputs.size(); ++idx)
    res.phi[cp.positive_outputs[idx]] = sol.phi_values[idx];
  res.target_x.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) res.target_x[i] = res.theta[i] * dmu.x[i];
  res.target_y.assign(s, 0.0);
  for (std::size_t r = 0; r < s; ++r) res.target_y[r] = res.phi[r] * dmu.y[r];

  // Existence probe for a zero-input optimal target: optima are not unique,
  // so re-solve with theta pinned to zero and compare values.
  if (!sets.positive_inputs.empty()) {
    CutProblem zp = build_cut_problem(tech, dmu.x, dmu.y, phi_cap, true);
    for (std::size_t idx = 0; idx < zp.phi_col.size(); ++idx) {
      add_tangent_cut(zp, idx, 1.0);
      if (phi_cap[idx] > 1.0 + 1e-12) add_tangent_cut(zp, idx, phi_cap[idx]);
    }
    CutSolution zsol = run_cutting_planes(zp, settings);
    if (zsol.feasible && zsol.converged)
      res.zero_input_target = zsol.objective / denom <= res.score + kZeroTargetTol;
  }
  return res;
}

double normalized_score(double score, std::size_t m, std::size_t s) {
  const double ms = static_cast<double>(m + s);
  const double lower = 1.0 - 1.0 / ms;
  if (score < lower - 1e-12 || score > 1.0 + 1e-12)
    throw OutOfRange("score " + std::to_string(score) +
                     " outside [1 - 1/(m+s), 1]");
  return ms * score - (ms - 1.0);
}

}  // namespace dea::measures
