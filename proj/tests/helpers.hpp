#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "dea/types.hpp"

namespace dea::testing {

// Builds an unvalidated dataset directly; tests may construct boundary cases
// that the CSV validator would reject.
inline Dataset make_dataset(std::vector<std::vector<double>> xs,
                            std::vector<std::vector<double>> ys) {
  Dataset ds;
  ds.m = xs.empty() ? 0 : xs[0].size();
  ds.s = ys.empty() ? 0 : ys[0].size();
  for (std::size_t i = 0; i < ds.m; ++i) ds.input_labels.push_back("in" + std::to_string(i + 1));
  for (std::size_t r = 0; r < ds.s; ++r) ds.output_labels.push_back("out" + std::to_string(r + 1));
  for (std::size_t j = 0; j < xs.size(); ++j) {
    Dmu d;
    d.id = static_cast<int>(j + 1);
    d.name = "dmu" + std::to_string(j + 1);
    d.x = xs[j];
    d.y = ys[j];
    ds.dmus.push_back(std::move(d));
  }
  return ds;
}

inline Technology vrs_technology(std::vector<std::vector<double>> xs,
                                 std::vector<std::vector<double>> ys,
                                 TradeoffSpec tradeoffs = {}) {
  return Technology(make_dataset(std::move(xs), std::move(ys)),
                    std::move(tradeoffs), Rts::kVrsTradeoffs);
}

// The worked two-unit instance used throughout: m = s = 1, units (1,1) and
// (2,3), plain VRS. P has facets x >= 1, y <= 3, 2x - y >= 1.
inline Technology two_dmu_instance() {
  return vrs_technology({{1.0}, {2.0}}, {{1.0}, {3.0}});
}

inline TradeoffColumn column(std::string label, std::vector<double> r_minus,
                             std::vector<double> r_plus) {
  return TradeoffColumn{std::move(label), std::move(r_minus), std::move(r_plus)};
}

inline std::string data_dir() {
  const char* env = std::getenv("DEA_DATA_DIR");
  return env ? env : "data";
}

}  // namespace dea::testing
