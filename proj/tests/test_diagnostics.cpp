#include <doctest.h>

#include <cmath>

#include "dea/diagnostics.hpp"
#include "dea/oracle.hpp"
#include "helpers.hpp"
#include "tiny_instances.hpp"

using namespace dea;
using testing::vrs_technology;

TEST_CASE("positivity minima on a one-column instance") {
  // Constraints v - u >= 0, v + u = 1: min v = 1/2, min u = 0.
  TradeoffSpec spec{{testing::column("c", {1.0}, {1.0})}};
  const auto tech = vrs_technology({{1.0}}, {{1.0}}, spec);
  const auto rep = diagnostics::facet_positivity_check(tech);
  REQUIRE(rep.v_star[0].has_value());
  REQUIRE(rep.u_star[0].has_value());
  CHECK(*rep.v_star[0] == doctest::Approx(0.5));
  CHECK(*rep.u_star[0] == doctest::Approx(0.0));
  CHECK_FALSE(rep.facet_positivity_passed);
}

TEST_CASE("no trade-offs means every minimum is zero") {
  const auto tech = vrs_technology({{1.0, 2.0}}, {{1.0, 1.0}});
  const auto rep = diagnostics::facet_positivity_check(tech);
  for (const auto& v : rep.v_star) CHECK(*v == doctest::Approx(0.0));
  for (const auto& u : rep.u_star) CHECK(*u == doctest::Approx(0.0));
  CHECK_FALSE(rep.facet_positivity_passed);
}

TEST_CASE("positivity check agrees with oracle facet normals on tiny instances") {
  testing::TinyGenerator gen(31337);
  int passed_count = 0;
  for (int trial = 0; trial < 800 && passed_count < 60; ++trial) {
    const Technology tech = gen.next(true);
    const auto rep = diagnostics::facet_positivity_check(tech);
    if (!rep.facet_positivity_passed) continue;
    ++passed_count;
    // The sufficient condition implies every facet normal is strictly
    // positive.
    for (const auto& f : oracle::enumerate_facets(tech)) {
      for (double v : f.v) CHECK(v > 0.0);
      for (double u : f.u) CHECK(u > 0.0);
    }
  }
  CHECK(passed_count >= 30);
}

TEST_CASE("free lunch on the hand-checked instance") {
  // One unit (1,1) and a column that refunds the input: (0,1) is reachable.
  TradeoffSpec spec{{testing::column("refund", {-1.0}, {0.0})}};
  const auto tech = vrs_technology({{1.0}}, {{1.0}}, spec);
  const auto rep = diagnostics::free_lunch_check(tech);
  REQUIRE(rep.free_lunch_value.has_value());
  CHECK(*rep.free_lunch_value == doctest::Approx(1.0));
  CHECK(rep.has_free_lunch);
  CHECK(rep.free_lunch_hypothesis_met);  // -v >= 0 forces v = 0, so u* = 1
  REQUIRE(rep.free_lunch_dual_value.has_value());
  CHECK(*rep.free_lunch_dual_value ==
        doctest::Approx(*rep.free_lunch_value).epsilon(1e-6));
}

TEST_CASE("plain VRS with positive inputs has no free lunch") {
  const auto tech = vrs_technology({{1.0}, {2.0}}, {{1.0}, {3.0}});
  const auto rep = diagnostics::free_lunch_check(tech);
  CHECK_FALSE(rep.free_lunch_value.has_value());  // LP infeasible
  CHECK_FALSE(rep.has_free_lunch);
}

TEST_CASE("consistency systems") {
  const auto ds = testing::make_dataset({{1.0}, {2.0}}, {{2.0}, {1.0}});
  CHECK(diagnostics::tradeoff_consistency(ds, {}) ==
        diagnostics::Feasibility::kFeasible);
  // v(x_1 - x_2) - u(y_1 - y_2) = -v - u >= 0 contradicts v + u = 1.
  CHECK(diagnostics::tradeoff_consistency(ds, {{1, 2}}) ==
        diagnostics::Feasibility::kInfeasible);
  CHECK(diagnostics::tradeoff_consistency(ds, {{2, 1}}) ==
        diagnostics::Feasibility::kFeasible);
  // Extra restrictions can flip feasibility.
  diagnostics::VuInequality force_u;
  force_u.u = {1.0};
  force_u.rhs = 2.0;  // u >= 2 contradicts the normalization
  CHECK(diagnostics::tradeoff_consistency(ds, {{2, 1}}, {force_u}) ==
        diagnostics::Feasibility::kInfeasible);
  CHECK_THROWS_AS(diagnostics::tradeoff_consistency(ds, {{1, 5}}), InvalidIds);
}

TEST_CASE("strong efficient set") {
  const auto solo = vrs_technology({{1.0}}, {{1.0}});
  CHECK(diagnostics::strong_efficient_set(solo) == std::vector<int>{1});

  // A doubled-input copy is excluded.
  const auto pair = vrs_technology({{1.0}, {2.0}}, {{1.0}, {1.0}});
  CHECK(diagnostics::strong_efficient_set(pair) == std::vector<int>{1});

  // Classification is invariant under positive row rescaling.
  const auto rescaled = vrs_technology({{1e6}, {2e6}}, {{1e-3}, {1e-3}});
  CHECK(diagnostics::strong_efficient_set(rescaled) == std::vector<int>{1});

  const auto hull = vrs_technology({{1.0}, {2.0}, {3.0}}, {{1.0}, {3.0}, {3.5}});
  CHECK(diagnostics::strong_efficient_set(hull) == std::vector<int>{1, 2, 3});
}
