#include "dea/oracle.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace dea::oracle {

namespace {

using Rat = boost::multiprecision::cpp_rational;
using Vec = std::vector<Rat>;

Rat dot(const Vec& a, const Vec& b) {
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// Row rank via fraction-preserving Gaussian elimination.
std::size_t rank(std::vector<Vec> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows.size(); ++c) {
    std::size_t pivot = rk;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rk], rows[pivot]);
    for (std::size_t r = rk + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rat f = rows[r][c] / rows[rk][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rk][j];
    }
    ++rk;
  }
  return rk;
}

// Solves the square system M w = e_k for every k; returns the columns of the
// inverse. M must be invertible (callers guarantee a full-rank seed).
std::vector<Vec> invert(std::vector<Vec> m) {
  const std::size_t d = m.size();
  std::vector<Vec> inv(d, Vec(d, Rat(0)));
  for (std::size_t i = 0; i < d; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t pivot = c;
    while (pivot < d && m[pivot][c] == 0) ++pivot;
    std::swap(m[c], m[pivot]);
    std::swap(inv[c], inv[pivot]);
    const Rat pv = m[c][c];
    for (std::size_t j = 0; j < d; ++j) {
      m[c][j] /= pv;
      inv[c][j] /= pv;
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rat f = m[r][c];
      for (std::size_t j = 0; j < d; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  // Columns of the inverse.
  std::vector<Vec> cols(d, Vec(d, Rat(0)));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) cols[c][r] = inv[r][c];
  return cols;
}

// Rescales a ray to a primitive integer direction to keep numbers small.
void canonicalize(Vec& w) {
  using boost::multiprecision::cpp_int;
  cpp_int l = 1;
  for (const Rat& q : w) l = lcm(l, denominator(q));
  cpp_int g = 0;
  std::vector<cpp_int> ints;
  ints.reserve(w.size());
  for (const Rat& q : w) {
    cpp_int v = numerator(q) * (l / denominator(q));
    ints.push_back(v);
    g = gcd(g, abs(v));
  }
  if (g == 0) return;
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = Rat(ints[i] / g);
}

// Extreme rays of {w : g.w >= 0 for all g} via incremental double
// description, seeded from an invertible subset of the constraints.
std::vector<Vec> extreme_rays(const std::vector<Vec>& constraints, std::size_t dim) {
  std::vector<std::size_t> seed;
  std::vector<Vec> seed_rows;
  for (std::size_t i = 0; i < constraints.size() && seed.size() < dim; ++i) {
    seed_rows.push_back(constraints[i]);
    if (rank(seed_rows) == seed.size() + 1)
      seed.push_back(i);
    else
      seed_rows.pop_back();
  }
  if (seed.size() < dim)
    throw Error("facet oracle: generator system does not span the space");

  std::vector<Vec> rays = invert(seed_rows);
  for (Vec& w : rays) canonicalize(w);
  std::vector<std::size_t> processed = seed;

  auto active_common = [&](const Vec& w1, const Vec& w2) {
    std::vector<Vec> rows;
    for (std::size_t idx : processed)
      if (dot(constraints[idx], w1) == 0 && dot(constraints[idx], w2) == 0)
        rows.push_back(constraints[idx]);
    return rows;
  };

  for (std::size_t gi = 0; gi < constraints.size(); ++gi) {
    if (std::find(seed.begin(), seed.end(), gi) != seed.end()) continue;
    const Vec& g = constraints[gi];
    std::vector<Rat> val(rays.size());
    bool any_neg = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(g, rays[i]);
      if (val[i] < 0) any_neg = true;
    }
    if (!any_neg) {
      processed.push_back(gi);
      continue;
    }
    std::vector<Vec> next;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (val[i] >= 0) next.push_back(rays[i]);
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] <= 0) continue;
      for (std::size_t j = 0; j < rays.size(); ++j) {
        if (val[j] >= 0) continue;
        // Adjacency: the common active set spans a (dim-2)-dimensional face.
        if (rank(active_common(rays[i], rays[j])) != dim - 2) continue;
        Vec w(dim, Rat(0));
        for (std::size_t c = 0; c < dim; ++c)
          w[c] = val[i] * rays[j][c] - val[j] * rays[i][c];
        canonicalize(w);
        next.push_back(std::move(w));
      }
    }
    // Deduplicate canonical directions.
    std::vector<Vec> unique;
    for (Vec& w : next) {
      bool dup = false;
      for (const Vec& u : unique)
        if (u == w) {
          dup = true;
          break;
        }
      if (!dup) unique.push_back(std::move(w));
    }
    rays = std::move(unique);
    processed.push_back(gi);
  }
  return rays;
}

}  // namespace

std::vector<Facet> enumerate_facets(const Technology& tech) {
  const std::size_t m = tech.m(), s = tech.s(), n = tech.n(), k = tech.k();
  const std::size_t d = m + s;
  if (d > 4 || n + k > 8)
    throw InstanceTooLarge("facet enumeration is limited to m+s <= 4 and n+K <= 8");

  // Dual cone of valid inequalities a.z + c >= 0 over w = (a, c):
  //   points p contribute rows (p, 1), rays r contribute rows (r, 0).
  std::vector<Vec> constraints;
  auto point_row = [&](const std::vector<double>& x, const std::vector<double>& y) {
    Vec row(d + 1, Rat(0));
    for (std::size_t i = 0; i < m; ++i) row[i] = Rat(x[i]);
    for (std::size_t r = 0; r < s; ++r) row[m + r] = Rat(y[r]);
    row[d] = 1;
    constraints.push_back(std::move(row));
  };
  auto ray_row = [&](const std::vector<double>& x, const std::vector<double>& y) {
    Vec row(d + 1, Rat(0));
    for (std::size_t i = 0; i < m; ++i) row[i] = Rat(x[i]);
    for (std::size_t r = 0; r < s; ++r) row[m + r] = Rat(y[r]);
    constraints.push_back(std::move(row));
  };

  const std::vector<double> zero_x(m, 0.0), zero_y(s, 0.0);
  if (tech.rts() == Rts::kVrsTradeoffs) {
    for (const Dmu& dmu : tech.dataset().dmus) point_row(dmu.x, dmu.y);
    for (const TradeoffColumn& col : tech.tradeoffs().columns)
      ray_row(col.r_minus, col.r_plus);
  } else {
    point_row(zero_x, zero_y);
    for (const Dmu& dmu : tech.dataset().dmus) ray_row(dmu.x, dmu.y);
  }
  // Free disposability: inputs may grow, outputs may shrink.
  for (std::size_t i = 0; i < m; ++i) {
    Vec row(d + 1, Rat(0));
    row[i] = 1;
    constraints.push_back(std::move(row));
  }
  for (std::size_t r = 0; r < s; ++r) {
    Vec row(d + 1, Rat(0));
    row[m + r] = -1;
    constraints.push_back(std::move(row));
  }

  std::vector<Facet> facets;
  for (const Vec& w : extreme_rays(constraints, d + 1)) {
    Rat norm = 0;
    for (std::size_t i = 0; i < m; ++i) norm += w[i];
    for (std::size_t r = 0; r < s; ++r) norm -= w[m + r];
    if (norm == 0) continue;  // the trivial ray (0, 1): 1 >= 0
    Facet f;
    f.v.resize(m);
    f.u.resize(s);
    for (std::size_t i = 0; i < m; ++i)
      f.v[i] = static_cast<double>(Rat(w[i] / norm));
    for (std::size_t r = 0; r < s; ++r)
      f.u[r] = static_cast<double>(Rat(-w[m + r] / norm));
    f.sigma = static_cast<double>(Rat(-w[d] / norm));
    facets.push_back(std::move(f));
  }
  return facets;
}

double phi_natural(const std::vector<Facet>& facets, const std::vector<double>& x,
                   const std::vector<double>& y, std::size_t r) {
  if (r >= y.size() || y[r] <= 0.0)
    throw Error("phi_natural requires y_r > 0");
  double best = std::numeric_limits<double>::infinity();
  bool bounded = false;
  for (const Facet& f : facets) {
    if (f.u[r] <= 0.0) continue;  // facet puts no ceiling on output r
    bounded = true;
    double num = -f.sigma;
    for (std::size_t i = 0; i < x.size(); ++i) num += f.v[i] * x[i];
    for (std::size_t q = 0; q < y.size(); ++q)
      if (q != r) num -= f.u[q] * y[q];
    best = std::min(best, num / (f.u[r] * y[r]));
  }
  if (!bounded)
    throw DivisionByZeroNormal("no facet has u_r > 0 for output " + std::to_string(r + 1));
  return best;
}

double theta_natural(const std::vector<Facet>& facets, const std::vector<double>& x,
                     const std::vector<double>& y, std::size_t i) {
  if (i >= x.size() || x[i] <= 0.0)
    throw Error("theta_natural requires x_i > 0");
  double best = 0.0;
  for (const Facet& f : facets) {
    if (f.v[i] <= 0.0) continue;
    double slack = -f.sigma;
    for (std::size_t p = 0; p < x.size(); ++p) slack += f.v[p] * x[p];
    for (std::size_t q = 0; q < y.size(); ++q) slack -= f.u[q] * y[q];
    best = std::max(best, 1.0 - slack / (f.v[i] * x[i]));
  }
  return best;
}

bool satisfies_facets(const std::vector<Facet>& facets, const std::vector<double>& x,
                      const std::vector<double>& y, double tol) {
  for (const Facet& f : facets) {
    double lhs = -f.sigma;
    for (std::size_t i = 0; i < x.size(); ++i) lhs += f.v[i] * x[i];
    for (std::size_t r = 0; r < y.size(); ++r) lhs -= f.u[r] * y[r];
    if (lhs < -tol) return false;
  }
  return true;
}

}  // namespace dea::oracle
