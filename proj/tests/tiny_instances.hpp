#pragma once

#include <random>
#include <vector>

#include "dea/types.hpp"

namespace dea::testing {

// Random tiny technologies within the oracle's combinatorial guard
// (m+s <= 4, n+K <= 8). Integer-ish data keeps the exact-arithmetic facet
// enumeration fast and makes zero patterns common.
struct TinyGenerator {
  std::mt19937 rng;
  explicit TinyGenerator(unsigned seed) : rng(seed) {}

  Technology next(bool with_tradeoffs, bool allow_zero_outputs = true) {
    std::uniform_int_distribution<int> dim(1, 2);
    const std::size_t m = static_cast<std::size_t>(dim(rng));
    const std::size_t s = static_cast<std::size_t>(dim(rng));
    std::uniform_int_distribution<int> nn(2, 5);
    const std::size_t n = static_cast<std::size_t>(nn(rng));
    std::uniform_int_distribution<int> val(1, 6);
    std::uniform_int_distribution<int> out_val(0, 6);

    Dataset ds;
    ds.m = m;
    ds.s = s;
    for (std::size_t i = 0; i < m; ++i) ds.input_labels.push_back("in" + std::to_string(i));
    for (std::size_t r = 0; r < s; ++r) ds.output_labels.push_back("out" + std::to_string(r));
    for (std::size_t j = 0; j < n; ++j) {
      Dmu d;
      d.id = static_cast<int>(j + 1);
      d.name = "u" + std::to_string(j + 1);
      for (std::size_t i = 0; i < m; ++i) d.x.push_back(val(rng));
      bool any = false;
      for (std::size_t r = 0; r < s; ++r) {
        double v = allow_zero_outputs ? out_val(rng) : val(rng);
        d.y.push_back(v);
        any = any || v > 0.0;
      }
      if (!any) d.y[0] = val(rng);
      ds.dmus.push_back(std::move(d));
    }

    TradeoffSpec spec;
    if (with_tradeoffs) {
      std::uniform_int_distribution<int> kk(1, static_cast<int>(8 - n));
      std::uniform_int_distribution<int> small(1, 3);
      const int k = kk(rng);
      for (int t = 0; t < k; ++t) {
        TradeoffColumn col;
        col.label = "t" + std::to_string(t);
        // Alternate between the two shapes that bend the axis-parallel
        // facets: pay inputs for outputs, or give up outputs for inputs.
        if (t % 2 == 0) {
          for (std::size_t i = 0; i < m; ++i) col.r_minus.push_back(small(rng));
          for (std::size_t r = 0; r < s; ++r) col.r_plus.push_back(small(rng));
        } else {
          for (std::size_t i = 0; i < m; ++i) col.r_minus.push_back(-small(rng));
          for (std::size_t r = 0; r < s; ++r) col.r_plus.push_back(-small(rng));
        }
        spec.columns.push_back(std::move(col));
      }
    }
    return Technology(std::move(ds), std::move(spec), Rts::kVrsTradeoffs);
  }
};

}  // namespace dea::testing
