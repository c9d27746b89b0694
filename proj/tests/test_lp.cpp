#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "dea/lp.hpp"

using namespace dea;

namespace {

// Independent optimum for small LPs with x >= 0: enumerate every basic
// solution of the slack-augmented equality system and keep the best feasible
// one. Shares nothing with the simplex implementation.
struct BruteForce {
  bool feasible = false;
  double value = 0.0;
};

bool solve_square(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double>& out) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    if (std::fabs(a[piv][c]) < 1e-9) return false;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      if (f == 0.0) continue;
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  out.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) out[i] = b[i] / a[i][i];
  return true;
}

BruteForce brute_force(const lp::LinearProgram& prog) {
  const std::size_t n = prog.num_vars();
  const std::size_t r = prog.rows.size();
  // Slack-augmented columns: structural then one slack/surplus per inequality.
  std::vector<std::vector<double>> cols;
  std::vector<double> cost;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> col(r, 0.0);
    for (std::size_t i = 0; i < r; ++i) col[i] = prog.rows[i].coeffs[j];
    cols.push_back(std::move(col));
    cost.push_back(prog.objective[j]);
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (prog.rows[i].rel == lp::Relation::kEq) continue;
    std::vector<double> col(r, 0.0);
    col[i] = prog.rows[i].rel == lp::Relation::kLe ? 1.0 : -1.0;
    cols.push_back(std::move(col));
    cost.push_back(0.0);
  }
  std::vector<double> rhs(r);
  for (std::size_t i = 0; i < r; ++i) rhs[i] = prog.rows[i].rhs;

  BruteForce best;
  const std::size_t total = cols.size();
  std::vector<std::size_t> pick;
  // Enumerate all r-subsets of columns.
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  const bool minimize = prog.sense == lp::Sense::kMinimize;
  while (true) {
    std::vector<std::vector<double>> a(r, std::vector<double>(r, 0.0));
    for (std::size_t c = 0; c < r; ++c)
      for (std::size_t i = 0; i < r; ++i) a[i][c] = cols[idx[c]][i];
    std::vector<double> xb;
    if (solve_square(a, rhs, xb)) {
      bool ok = true;
      for (double v : xb)
        if (v < -1e-7) ok = false;
      if (ok) {
        double val = 0.0;
        for (std::size_t c = 0; c < r; ++c) val += cost[idx[c]] * std::max(xb[c], 0.0);
        if (!best.feasible || (minimize ? val < best.value : val > best.value))
          best.value = val;
        best.feasible = true;
      }
    }
    // Next combination.
    std::size_t k = r;
    while (k > 0 && idx[k - 1] == total - r + (k - 1)) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

void check_reported_solution(const lp::LinearProgram& prog, const lp::Outcome& out) {
  REQUIRE(out.status == lp::Status::kOptimal);
  for (std::size_t i = 0; i < prog.rows.size(); ++i) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < prog.num_vars(); ++j)
      lhs += prog.rows[i].coeffs[j] * out.primal[j];
    const double slack = 1e-7 * (1.0 + std::fabs(prog.rows[i].rhs));
    switch (prog.rows[i].rel) {
      case lp::Relation::kLe: CHECK(lhs <= prog.rows[i].rhs + slack); break;
      case lp::Relation::kGe: CHECK(lhs >= prog.rows[i].rhs - slack); break;
      case lp::Relation::kEq: CHECK(std::fabs(lhs - prog.rows[i].rhs) <= slack); break;
    }
  }
  for (std::size_t j = 0; j < prog.num_vars(); ++j) {
    const auto b = prog.bound(j);
    CHECK(out.primal[j] >= b.lower - 1e-9 * (1.0 + std::fabs(b.lower)));
    CHECK(out.primal[j] <= b.upper + 1e-9 * (1.0 + std::fabs(b.upper)));
  }
  CHECK(std::fabs(out.value - out.dual_value) <= 1e-6 * (1.0 + std::fabs(out.value)));
}

}  // namespace

TEST_CASE("minimal one-variable programs") {
  lp::LinearProgram p;
  p.objective = {1.0};
  p.add_row({1.0}, lp::Relation::kGe, 1.0);
  auto out = lp::solve(p);
  REQUIRE(out.status == lp::Status::kOptimal);
  CHECK(out.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(out.primal[0] == doctest::Approx(1.0));

  lp::LinearProgram infeas;
  infeas.objective = {1.0};
  infeas.add_row({1.0}, lp::Relation::kLe, -1.0);
  CHECK(lp::solve(infeas).status == lp::Status::kInfeasible);

  lp::LinearProgram two;
  two.sense = lp::Sense::kMaximize;
  two.objective = {1.0, 1.0};
  two.add_row({1.0, 1.0}, lp::Relation::kLe, 2.0);
  out = lp::solve(two);
  REQUIRE(out.status == lp::Status::kOptimal);
  CHECK(out.value == doctest::Approx(2.0));
  check_reported_solution(two, out);
}

TEST_CASE("unbounded detection") {
  lp::LinearProgram p;
  p.sense = lp::Sense::kMaximize;
  p.objective = {1.0};
  CHECK(lp::solve(p).status == lp::Status::kUnbounded);

  lp::LinearProgram down;
  down.objective = {1.0};
  down.set_bounds(0, -lp::kInf, 5.0);
  CHECK(lp::solve(down).status == lp::Status::kUnbounded);
}

TEST_CASE("bounds handling") {
  lp::LinearProgram p;
  p.sense = lp::Sense::kMaximize;
  p.objective = {1.0};
  p.set_bounds(0, -lp::kInf, 5.0);
  auto out = lp::solve(p);
  REQUIRE(out.status == lp::Status::kOptimal);
  CHECK(out.value == doctest::Approx(5.0));

  // Free variable: max 2x - y with y >= x - 1, x <= 3.
  lp::LinearProgram q;
  q.sense = lp::Sense::kMaximize;
  q.objective = {2.0, -1.0};
  q.set_bounds(0, 0.0, 3.0);
  q.set_bounds(1, -lp::kInf, lp::kInf);
  q.add_row({1.0, -1.0}, lp::Relation::kLe, 1.0);
  out = lp::solve(q);
  REQUIRE(out.status == lp::Status::kOptimal);
  CHECK(out.value == doctest::Approx(4.0));
  CHECK(out.primal[0] == doctest::Approx(3.0));
  CHECK(out.primal[1] == doctest::Approx(2.0));
  check_reported_solution(q, out);

  // Fixed variable via equal bounds.
  lp::LinearProgram f;
  f.objective = {1.0, 1.0};
  f.set_bounds(0, 2.0, 2.0);
  f.add_row({1.0, 1.0}, lp::Relation::kGe, 3.0);
  out = lp::solve(f);
  REQUIRE(out.status == lp::Status::kOptimal);
  CHECK(out.primal[0] == doctest::Approx(2.0));
  CHECK(out.value == doctest::Approx(3.0));
}

TEST_CASE("degenerate program known to cycle under naive pricing") {
  // Beale's example; the optimum is -0.05.
  lp::LinearProgram p;
  p.objective = {-0.75, 150.0, -0.02, 6.0};
  p.add_row({0.25, -60.0, -0.04, 9.0}, lp::Relation::kLe, 0.0);
  p.add_row({0.5, -90.0, -0.02, 3.0}, lp::Relation::kLe, 0.0);
  p.add_row({0.0, 0.0, 1.0, 0.0}, lp::Relation::kLe, 1.0);
  const auto out = lp::solve(p);
  REQUIRE(out.status == lp::Status::kOptimal);
  const auto bf = brute_force(p);
  REQUIRE(bf.feasible);
  CHECK(out.value == doctest::Approx(bf.value).epsilon(1e-9));
  CHECK(out.value == doctest::Approx(-0.05));
  check_reported_solution(p, out);
}

TEST_CASE("random bounded programs match basic-solution enumeration") {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  std::uniform_real_distribution<double> pos(0.2, 2.0);
  std::uniform_int_distribution<int> coin(0, 1);

  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 5, r = 4;
    lp::LinearProgram p;
    p.sense = coin(rng) ? lp::Sense::kMinimize : lp::Sense::kMaximize;
    p.objective.resize(n);
    for (auto& c : p.objective) c = coef(rng);
    // Feasible by construction: rhs covers a random nonnegative point.
    std::vector<double> x0(n);
    for (auto& v : x0) v = pos(rng) * coin(rng);
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<double> row(n);
      double lhs = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        row[j] = coef(rng);
        lhs += row[j] * x0[j];
      }
      p.add_row(std::move(row), lp::Relation::kLe, lhs + pos(rng));
    }
    // Bounding box keeps the optimum finite.
    p.add_row(std::vector<double>(n, 1.0), lp::Relation::kLe, 25.0);

    const auto out = lp::solve(p);
    const auto bf = brute_force(p);
    REQUIRE(bf.feasible);
    REQUIRE(out.status == lp::Status::kOptimal);
    CHECK(out.value == doctest::Approx(bf.value).epsilon(1e-7));
    check_reported_solution(p, out);
  }
}

TEST_CASE("random infeasible programs are classified") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    lp::LinearProgram p;
    p.objective = {coef(rng), coef(rng), coef(rng)};
    for (int i = 0; i < 3; ++i)
      p.add_row({coef(rng), coef(rng), coef(rng)}, lp::Relation::kLe, coef(rng));
    p.add_row({1.0, 1.0, 1.0}, lp::Relation::kLe, -1.0);  // contradiction
    CHECK(lp::solve(p).status == lp::Status::kInfeasible);
  }
}

TEST_CASE("solves are deterministic") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> coef(-5.0, 5.0);
  lp::LinearProgram p;
  const std::size_t n = 40, r = 25;
  p.sense = lp::Sense::kMaximize;
  p.objective.resize(n);
  for (auto& c : p.objective) c = coef(rng);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<double> row(n);
    for (auto& v : row) v = coef(rng);
    p.add_row(std::move(row), lp::Relation::kLe, 10.0 + std::fabs(coef(rng)));
  }
  p.add_row(std::vector<double>(n, 1.0), lp::Relation::kLe, 50.0);

  const auto a = lp::solve(p);
  const auto b = lp::solve(p);
  REQUIRE(a.status == b.status);
  REQUIRE(a.status == lp::Status::kOptimal);
  CHECK(std::memcmp(&a.value, &b.value, sizeof(double)) == 0);
  REQUIRE(a.primal.size() == b.primal.size());
  CHECK(std::memcmp(a.primal.data(), b.primal.data(),
                    a.primal.size() * sizeof(double)) == 0);
  CHECK(std::memcmp(a.duals.data(), b.duals.data(),
                    a.duals.size() * sizeof(double)) == 0);
}

TEST_CASE("badly scaled data is equilibrated") {
  // Magnitudes mirror the case-study spread (1 to ~1.4e6).
  lp::LinearProgram p;
  p.sense = lp::Sense::kMaximize;
  p.objective = {1.0};
  p.add_row({1425671.0}, lp::Relation::kLe, 1425671.0 * 0.75);
  p.add_row({1.0}, lp::Relation::kLe, 10.0);
  const auto out = lp::solve(p);
  REQUIRE(out.status == lp::Status::kOptimal);
  CHECK(out.value == doctest::Approx(0.75).epsilon(1e-12));
  check_reported_solution(p, out);
}

TEST_CASE("invalid programs are rejected") {
  lp::LinearProgram p;
  p.objective = {1.0};
  p.add_row({1.0, 2.0}, lp::Relation::kLe, 1.0);
  CHECK_THROWS_AS(lp::solve(p), lp::InvalidProgram);

  lp::LinearProgram q;
  q.objective = {1.0};
  q.set_bounds(0, 2.0, 1.0);
  CHECK_THROWS_AS(lp::solve(q), lp::InvalidProgram);
}
