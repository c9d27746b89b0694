#include "dea/lp.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace dea::lp {

namespace {

constexpr double kTieEps = 1e-9;
// Consecutive degenerate pivots tolerated before switching the pricing rule
// to Bland's (smallest index), which cannot cycle.
constexpr std::size_t kStallThreshold = 300;

struct ColMap {
  std::size_t user = 0;
  double sign = 1.0;
};

// Internal problem: min c.x s.t. A x rel b, x >= 0. Rows are the user rows
// followed by synthetic upper-bound rows.
struct Internal {
  std::vector<double> cost;
  std::vector<std::vector<double>> a;
  std::vector<Relation> rel;
  std::vector<double> rhs;
  std::vector<ColMap> colmap;
  std::vector<double> user_offset;  // per user variable
  std::size_t num_user_rows = 0;
  double sense_mult = 1.0;  // +1 minimize, -1 maximize

  std::size_t ncols() const { return cost.size(); }
  std::size_t nrows() const { return a.size(); }
};

void validate(const LinearProgram& lp) {
  const std::size_t nv = lp.num_vars();
  for (double c : lp.objective)
    if (!std::isfinite(c)) throw InvalidProgram("non-finite objective coefficient");
  for (const Row& row : lp.rows) {
    if (row.coeffs.size() != nv)
      throw InvalidProgram("row length does not match variable count");
    if (!std::isfinite(row.rhs)) throw InvalidProgram("non-finite row rhs");
    for (double a : row.coeffs)
      if (!std::isfinite(a)) throw InvalidProgram("non-finite row coefficient");
  }
  if (lp.bounds.size() > nv) throw InvalidProgram("more bounds than variables");
  for (std::size_t j = 0; j < lp.bounds.size(); ++j) {
    const VarBounds b = lp.bounds[j];
    if (std::isnan(b.lower) || std::isnan(b.upper))
      throw InvalidProgram("NaN variable bound");
    if (b.lower > b.upper) throw InvalidProgram("lower bound exceeds upper bound");
    if (b.lower == kInf || b.upper == -kInf)
      throw InvalidProgram("infinite bound with wrong sign");
  }
}

Internal transform(const LinearProgram& lp) {
  const std::size_t nv = lp.num_vars();
  Internal t;
  t.sense_mult = lp.sense == Sense::kMinimize ? 1.0 : -1.0;
  t.user_offset.assign(nv, 0.0);

  // Columns of each user variable, after shifting to x >= 0 form.
  std::vector<std::vector<std::size_t>> cols_of(nv);
  struct BoundRow {
    std::size_t col;
    double rhs;
  };
  std::vector<BoundRow> bound_rows;

  for (std::size_t j = 0; j < nv; ++j) {
    const VarBounds b = lp.bound(j);
    if (b.lower > -kInf) {
      t.user_offset[j] = b.lower;
      t.colmap.push_back({j, 1.0});
      cols_of[j].push_back(t.colmap.size() - 1);
      if (b.upper < kInf)
        bound_rows.push_back({t.colmap.size() - 1, b.upper - b.lower});
    } else if (b.upper < kInf) {
      // Mirror: x = upper - x'.
      t.user_offset[j] = b.upper;
      t.colmap.push_back({j, -1.0});
      cols_of[j].push_back(t.colmap.size() - 1);
    } else {
      // Free variable split.
      t.colmap.push_back({j, 1.0});
      cols_of[j].push_back(t.colmap.size() - 1);
      t.colmap.push_back({j, -1.0});
      cols_of[j].push_back(t.colmap.size() - 1);
    }
  }

  const std::size_t nc = t.colmap.size();
  t.cost.assign(nc, 0.0);
  for (std::size_t c = 0; c < nc; ++c)
    t.cost[c] = t.sense_mult * lp.objective[t.colmap[c].user] * t.colmap[c].sign;

  t.num_user_rows = lp.rows.size();
  for (const Row& row : lp.rows) {
    std::vector<double> a(nc, 0.0);
    double shift = 0.0;
    for (std::size_t j = 0; j < nv; ++j) {
      if (row.coeffs[j] == 0.0) continue;
      shift += row.coeffs[j] * t.user_offset[j];
      for (std::size_t c : cols_of[j]) a[c] = row.coeffs[j] * t.colmap[c].sign;
    }
    t.a.push_back(std::move(a));
    t.rel.push_back(row.rel);
    t.rhs.push_back(row.rhs - shift);
  }
  for (const BoundRow& br : bound_rows) {
    std::vector<double> a(nc, 0.0);
    a[br.col] = 1.0;
    t.a.push_back(std::move(a));
    t.rel.push_back(Relation::kLe);
    t.rhs.push_back(br.rhs);
  }
  return t;
}

// Dense two-phase simplex working storage.
class Tableau {
 public:
  Tableau(const Internal& in, const Settings& st) : in_(in), st_(st) {
    max_iter_ = st.max_iterations
                    ? st.max_iterations
                    : 60 * (in.nrows() + in.ncols() + 200);
    equilibrate();
    build_standard_form();
  }

  Status run();

  // Accessors used after run() returns kOptimal.
  std::vector<double> internal_primal() const;
  // Internal-row duals (zero for rows dropped as redundant).
  std::vector<double> internal_duals() const;
  double scaled_rhs(std::size_t internal_row) const { return b0_[internal_row]; }
  bool row_dropped(std::size_t internal_row) const {
    return tab_row_of_[internal_row] < 0;
  }
  double row_scale(std::size_t internal_row) const { return rsc_[internal_row]; }
  double col_scale(std::size_t c) const { return csc_[c]; }
  std::size_t iterations() const { return iterations_; }

  void verify_scaled_feasibility() const;

 private:
  void equilibrate();
  void build_standard_form();
  void build_cost_row(const std::vector<double>& costs);
  void pivot(std::size_t prow, std::size_t pcol);
  long choose_entering(bool bland) const;
  long choose_leaving(std::size_t enter) const;
  Status iterate(bool phase_one);
  void cleanup_artificials();

  double& at(std::size_t r, std::size_t c) { return tab_[r * stride_ + c]; }
  double at(std::size_t r, std::size_t c) const { return tab_[r * stride_ + c]; }

  const Internal& in_;
  const Settings& st_;
  std::size_t max_iter_ = 0;
  std::size_t iterations_ = 0;

  std::vector<double> rsc_, csc_;       // row/column equilibration scales
  std::vector<double> sa_;              // scaled matrix, row-major ncols wide
  std::vector<double> sb_;              // scaled rhs, sign-normalized
  std::vector<double> ssign_;           // +-1 applied to reach sb_ >= 0
  std::vector<Relation> srel_;

  std::size_t nrows_ = 0;               // tableau rows (may shrink on drops)
  std::size_t ncols_ = 0;               // structural + unit columns
  std::size_t stride_ = 0;
  std::vector<double> tab_;             // (nrows_+1) x (ncols_+1)
  std::vector<std::size_t> basis_;
  std::vector<char> is_artificial_;     // per column
  std::vector<std::size_t> unit_col_;   // per internal row: its unit column
  std::vector<double> unit_sign_;       // +1 slack/artificial, -1 surplus
  std::vector<long> tab_row_of_;        // internal row -> tableau row (or -1)
  std::vector<std::size_t> internal_row_of_;  // tableau row -> internal row
  std::vector<double> b0_;              // scaled sign-normalized rhs, frozen copy
  std::vector<double> phase2_cost_;
  bool has_artificials_ = false;
};

void Tableau::equilibrate() {
  const std::size_t R = in_.nrows(), C = in_.ncols();
  rsc_.assign(R, 1.0);
  csc_.assign(C, 1.0);
  for (std::size_t i = 0; i < R; ++i) {
    double mx = 0.0;
    for (double v : in_.a[i]) mx = std::max(mx, std::fabs(v));
    if (mx > 0.0) rsc_[i] = 1.0 / mx;
  }
  for (std::size_t j = 0; j < C; ++j) {
    double mx = 0.0;
    for (std::size_t i = 0; i < R; ++i) mx = std::max(mx, std::fabs(rsc_[i] * in_.a[i][j]));
    if (mx > 0.0) csc_[j] = 1.0 / mx;
  }
  sa_.assign(R * C, 0.0);
  sb_.assign(R, 0.0);
  ssign_.assign(R, 1.0);
  srel_ = in_.rel;
  for (std::size_t i = 0; i < R; ++i) {
    for (std::size_t j = 0; j < C; ++j) sa_[i * C + j] = rsc_[i] * in_.a[i][j] * csc_[j];
    sb_[i] = rsc_[i] * in_.rhs[i];
    if (sb_[i] < 0.0) {
      ssign_[i] = -1.0;
      sb_[i] = -sb_[i];
      for (std::size_t j = 0; j < C; ++j) sa_[i * C + j] = -sa_[i * C + j];
      if (srel_[i] == Relation::kLe)
        srel_[i] = Relation::kGe;
      else if (srel_[i] == Relation::kGe)
        srel_[i] = Relation::kLe;
    }
  }
}

void Tableau::build_standard_form() {
  const std::size_t R = in_.nrows(), C = in_.ncols();
  // Column layout: structural | one unit column per row (slack/surplus or
  // artificial carrier) | artificials for >=-rows with positive rhs.
  std::vector<std::size_t> extra_art(R, SIZE_MAX);
  std::size_t next = C;
  unit_col_.assign(R, 0);
  unit_sign_.assign(R, 1.0);
  for (std::size_t i = 0; i < R; ++i) {
    unit_col_[i] = next++;
  }
  for (std::size_t i = 0; i < R; ++i) {
    if (srel_[i] == Relation::kGe && sb_[i] > 0.0) extra_art[i] = next++;
  }
  ncols_ = next;
  nrows_ = R;
  stride_ = ncols_ + 1;
  tab_.assign((nrows_ + 1) * stride_, 0.0);
  basis_.assign(nrows_, 0);
  is_artificial_.assign(ncols_, 0);
  tab_row_of_.assign(R, -1);
  internal_row_of_.assign(R, 0);
  b0_ = sb_;

  for (std::size_t i = 0; i < R; ++i) {
    tab_row_of_[i] = static_cast<long>(i);
    internal_row_of_[i] = i;
    for (std::size_t j = 0; j < C; ++j) at(i, j) = sa_[i * C + j];
    at(i, ncols_) = sb_[i];
    switch (srel_[i]) {
      case Relation::kLe:
        at(i, unit_col_[i]) = 1.0;
        basis_[i] = unit_col_[i];
        break;
      case Relation::kGe:
        at(i, unit_col_[i]) = -1.0;
        unit_sign_[i] = -1.0;
        if (sb_[i] > 0.0) {
          at(i, extra_art[i]) = 1.0;
          is_artificial_[extra_art[i]] = 1;
          basis_[i] = extra_art[i];
          has_artificials_ = true;
        } else {
          // Surplus may start basic at level zero.
          basis_[i] = unit_col_[i];
          // Flip the row so the basic column has coefficient +1.
          for (std::size_t j = 0; j <= ncols_; ++j) at(i, j) = -at(i, j);
        }
        break;
      case Relation::kEq:
        at(i, unit_col_[i]) = 1.0;
        is_artificial_[unit_col_[i]] = 1;
        basis_[i] = unit_col_[i];
        has_artificials_ = true;
        break;
    }
  }
  phase2_cost_.assign(ncols_, 0.0);
  for (std::size_t j = 0; j < C; ++j) phase2_cost_[j] = in_.cost[j] * csc_[j];
}

void Tableau::build_cost_row(const std::vector<double>& costs) {
  for (std::size_t j = 0; j <= ncols_; ++j) at(nrows_, j) = 0.0;
  for (std::size_t j = 0; j < ncols_; ++j) at(nrows_, j) = costs[j];
  for (std::size_t i = 0; i < nrows_; ++i) {
    const double cb = costs[basis_[i]];
    if (cb == 0.0) continue;
    for (std::size_t j = 0; j <= ncols_; ++j) at(nrows_, j) -= cb * at(i, j);
  }
}

void Tableau::pivot(std::size_t prow, std::size_t pcol) {
  const double pv = at(prow, pcol);
  const double inv = 1.0 / pv;
  for (std::size_t j = 0; j <= ncols_; ++j) at(prow, j) *= inv;
  at(prow, pcol) = 1.0;
  for (std::size_t r = 0; r <= nrows_; ++r) {
    if (r == prow) continue;
    const double f = at(r, pcol);
    if (f == 0.0) continue;
    double* dst = &tab_[r * stride_];
    const double* src = &tab_[prow * stride_];
    for (std::size_t j = 0; j <= ncols_; ++j) dst[j] -= f * src[j];
    at(r, pcol) = 0.0;
  }
  basis_[prow] = pcol;
}

long Tableau::choose_entering(bool bland) const {
  const double tol = st_.optimality_tol;
  long best = -1;
  double best_d = -tol;
  for (std::size_t j = 0; j < ncols_; ++j) {
    if (is_artificial_[j]) continue;
    const double d = at(nrows_, j);
    if (d < best_d) {
      best = static_cast<long>(j);
      if (bland) return best;
      best_d = d;
    }
  }
  return best;
}

long Tableau::choose_leaving(std::size_t enter) const {
  long leave = -1;
  double best_ratio = kInf;
  for (std::size_t i = 0; i < nrows_; ++i) {
    const double a = at(i, enter);
    if (a <= st_.pivot_tol) continue;
    double rhs = at(i, ncols_);
    if (rhs < 0.0) rhs = 0.0;  // roundoff guard; basis stays feasible
    const double ratio = rhs / a;
    if (leave < 0 || ratio < best_ratio - kTieEps * (1.0 + best_ratio)) {
      best_ratio = ratio;
      leave = static_cast<long>(i);
    } else if (ratio <= best_ratio + kTieEps * (1.0 + best_ratio) &&
               basis_[i] < basis_[static_cast<std::size_t>(leave)]) {
      leave = static_cast<long>(i);  // Bland tie-break: smallest basic index
    }
  }
  return leave;
}

Status Tableau::iterate(bool phase_one) {
  std::size_t degenerate_run = 0;
  while (true) {
    if (++iterations_ > max_iter_)
      throw NumericalBreakdown("simplex iteration limit exceeded");
    const bool bland = degenerate_run > kStallThreshold;
    const long enter = choose_entering(bland);
    if (enter < 0) return Status::kOptimal;
    const long leave = choose_leaving(static_cast<std::size_t>(enter));
    if (leave < 0) {
      if (phase_one)
        throw NumericalBreakdown("phase-1 objective unbounded; scaling failed");
      return Status::kUnbounded;
    }
    const double step = std::max(at(static_cast<std::size_t>(leave), ncols_), 0.0);
    if (step <= st_.feasibility_tol)
      ++degenerate_run;
    else
      degenerate_run = 0;
    pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(enter));
  }
}

void Tableau::cleanup_artificials() {
  // Pivot zero-level artificials out of the basis; drop rows that expose a
  // linearly dependent constraint.
  for (std::size_t i = 0; i < nrows_;) {
    if (!is_artificial_[basis_[i]]) {
      ++i;
      continue;
    }
    std::size_t best_col = SIZE_MAX;
    double best_abs = st_.pivot_tol;
    for (std::size_t j = 0; j < ncols_; ++j) {
      if (is_artificial_[j]) continue;
      const double a = std::fabs(at(i, j));
      if (a > best_abs) {
        best_abs = a;
        best_col = j;
      }
    }
    if (best_col != SIZE_MAX) {
      pivot(i, best_col);
      ++i;
      continue;
    }
    // Redundant row: remove it from the tableau.
    const std::size_t internal = internal_row_of_[i];
    tab_row_of_[internal] = -1;
    tab_.erase(tab_.begin() + static_cast<long>(i * stride_),
               tab_.begin() + static_cast<long>((i + 1) * stride_));
    basis_.erase(basis_.begin() + static_cast<long>(i));
    internal_row_of_.erase(internal_row_of_.begin() + static_cast<long>(i));
    --nrows_;
    for (std::size_t r = 0; r < in_.nrows(); ++r)
      if (tab_row_of_[r] > static_cast<long>(i)) --tab_row_of_[r];
  }
}

Status Tableau::run() {
  if (has_artificials_) {
    std::vector<double> phase1(ncols_, 0.0);
    for (std::size_t j = 0; j < ncols_; ++j)
      if (is_artificial_[j]) phase1[j] = 1.0;
    build_cost_row(phase1);
    const Status s = iterate(true);
    (void)s;  // phase 1 is always bounded
    double art_sum = 0.0;
    for (std::size_t i = 0; i < nrows_; ++i)
      if (is_artificial_[basis_[i]]) art_sum += std::max(at(i, ncols_), 0.0);
    double bnorm = 0.0;
    for (double b : b0_) bnorm += std::fabs(b);
    if (art_sum > st_.feasibility_tol * (1.0 + bnorm) + 1e-10)
      return Status::kInfeasible;
    cleanup_artificials();
  }
  build_cost_row(phase2_cost_);
  return iterate(false);
}

std::vector<double> Tableau::internal_primal() const {
  std::vector<double> x(in_.ncols(), 0.0);
  for (std::size_t i = 0; i < nrows_; ++i) {
    if (basis_[i] < in_.ncols()) {
      double v = at(i, ncols_);
      if (v < 0.0 && v > -1e-11) v = 0.0;
      x[basis_[i]] = v;
    }
  }
  return x;
}

std::vector<double> Tableau::internal_duals() const {
  std::vector<double> y(in_.nrows(), 0.0);
  for (std::size_t r = 0; r < in_.nrows(); ++r) {
    if (tab_row_of_[r] < 0) continue;
    const double d = at(nrows_, unit_col_[r]);
    const double y_scaled = -unit_sign_[r] * d;
    y[r] = ssign_[r] * rsc_[r] * y_scaled;
  }
  return y;
}

void Tableau::verify_scaled_feasibility() const {
  const std::size_t C = in_.ncols();
  std::vector<double> x(C, 0.0);
  for (std::size_t i = 0; i < nrows_; ++i)
    if (basis_[i] < C) x[basis_[i]] = at(i, ncols_);
  for (std::size_t r = 0; r < in_.nrows(); ++r) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < C; ++j) lhs += sa_[r * C + j] * x[j];
    const double rhs = sb_[r];
    double viol = 0.0;
    switch (srel_[r]) {
      case Relation::kLe: viol = lhs - rhs; break;
      case Relation::kGe: viol = rhs - lhs; break;
      case Relation::kEq: viol = std::fabs(lhs - rhs); break;
    }
    if (viol > 1e-5 * (1.0 + std::fabs(rhs))) {
      std::fprintf(stderr, "row %zu rel %d viol %.3e rhs %.3e\n", r, (int)srel_[r], viol, rhs);
      throw NumericalBreakdown("optimal basis fails scaled feasibility check");
    }
  }
}

}  // namespace

Outcome solve(const LinearProgram& lp, const Settings& settings) {
  validate(lp);
  const Internal in = transform(lp);
  Tableau tab(in, settings);
  Outcome out;
  out.status = tab.run();
  out.iterations = tab.iterations();
  if (out.status != Status::kOptimal) return out;
  tab.verify_scaled_feasibility();

  const std::vector<double> xin = tab.internal_primal();
  std::vector<double> xu(lp.num_vars(), 0.0);
  for (std::size_t j = 0; j < lp.num_vars(); ++j) xu[j] = in.user_offset[j];
  for (std::size_t c = 0; c < in.ncols(); ++c)
    xu[in.colmap[c].user] += in.colmap[c].sign * tab.col_scale(c) * xin[c];
  out.primal = std::move(xu);

  double value = 0.0;
  for (std::size_t j = 0; j < lp.num_vars(); ++j)
    value += lp.objective[j] * out.primal[j];
  out.value = value;

  const std::vector<double> yin = tab.internal_duals();
  out.duals.assign(lp.rows.size(), 0.0);
  for (std::size_t r = 0; r < lp.rows.size(); ++r)
    out.duals[r] = in.sense_mult * yin[r];

  // Dual objective over the full internal row set (bound rows included),
  // plus the constant picked up by the variable shifts.
  double dual = 0.0;
  for (std::size_t r = 0; r < in.nrows(); ++r) dual += yin[r] * in.rhs[r];
  double shift_const = 0.0;
  for (std::size_t j = 0; j < lp.num_vars(); ++j)
    shift_const += lp.objective[j] * in.user_offset[j];
  out.dual_value = in.sense_mult * dual + shift_const;
  return out;
}

}  // namespace dea::lp
