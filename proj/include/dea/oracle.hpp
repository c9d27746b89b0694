#pragma once

#include <cstddef>
#include <vector>

#include "dea/types.hpp"

namespace dea::oracle {

// Brute-force machinery for tiny instances, used by tests and acceptance
// checks only. Independent of the LP solver: facets come from exact rational
// double description over the generator representation of P.

class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};
// No facet constrains the requested coordinate: the closed-form bound ranges
// over an empty set, i.e. the frontier assumption fails on this instance.
class DivisionByZeroNormal : public Error {
 public:
  using Error::Error;
};

// Facet of the superset P: { (x,y) : v x - u y - sigma >= 0 }, normalized so
// that sum(v) + sum(u) = 1.
struct Facet {
  std::vector<double> v;  // length m, >= 0
  std::vector<double> u;  // length s, >= 0
  double sigma = 0.0;
};

// Complete, duplicate-free facet list of P. Generators: the observed points
// with the recession cone spanned by trade-off columns and the free
// disposability directions (e_i, 0) and (0, -e_r). Guarded to m+s <= 4 and
// n+K <= 8; the method is combinatorial.
std::vector<Facet> enumerate_facets(const Technology& tech);

// min over facets with u_r > 0 of (v x - sum_{q != r} u_q y_q - sigma)/(u_r y_r);
// the closed-form single-output expansion bound. Requires y_r > 0.
double phi_natural(const std::vector<Facet>& facets, const std::vector<double>& x,
                   const std::vector<double>& y, std::size_t r);

// max over facets with v_i > 0 of 1 - (v x - u y - sigma)/(v_i x_i), clamped
// at 0; the closed-form single-input contraction bound. Requires x_i > 0.
double theta_natural(const std::vector<Facet>& facets, const std::vector<double>& x,
                     const std::vector<double>& y, std::size_t i);

// Facet-wise membership in P (not T: no orthant sign conditions).
bool satisfies_facets(const std::vector<Facet>& facets, const std::vector<double>& x,
                      const std::vector<double>& y, double tol = 1e-9);

}  // namespace dea::oracle
