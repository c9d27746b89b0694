#pragma once

#include <string>
#include <vector>

#include "dea/types.hpp"

namespace dea {

// Trade-off file: {"columns": [{"label": ..., "r_minus": [m reals],
// "r_plus": [s reals]}, ...]}. Numbers are decimal text parsed to binary64.
TradeoffSpec load_tradeoffs(const std::string& path, std::size_t m, std::size_t s);
std::string tradeoffs_to_json(const TradeoffSpec& spec);

// Case-study construction: one column x_p - x_q / y_p - y_q for every pair
// (p, q) in ((all \ top_set) x top_set) u ((top_set \ {hub}) x {hub}),
// plus the fixed silver-to-bronze swap column (0, (0,-1,1)).
TradeoffSpec build_olympic_tradeoffs(const Dataset& dataset,
                                     const std::vector<int>& top_set, int hub);

// Sets shipped next to the dataset rather than hard-coded: the trade-off
// reference sets and the published strong-efficient set.
struct CaseStudyConfig {
  std::vector<int> top_set;  // reference set used to generate trade-offs
  int hub = 0;               // id every other top nation may move towards
  std::vector<int> b11;      // top set before the consistency-driven exclusion
  std::vector<int> efficient_set_vrs;
};

CaseStudyConfig load_case_config(const std::string& path);

}  // namespace dea
