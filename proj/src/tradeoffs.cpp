#include "dea/tradeoffs.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace dea {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DataError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

std::vector<double> number_list(const json& j, const std::string& what) {
  std::vector<double> out;
  if (!j.is_array()) throw DataError(what + " must be an array of numbers");
  for (const auto& v : j) {
    if (v.is_number())
      out.push_back(v.get<double>());
    else if (v.is_string())
      out.push_back(std::stod(v.get<std::string>()));
    else
      throw DataError(what + " must contain numbers");
  }
  return out;
}

}  // namespace

TradeoffSpec load_tradeoffs(const std::string& path, std::size_t m, std::size_t s) {
  const json j = load_json(path);
  if (!j.contains("columns")) throw DataError("trade-off file lacks 'columns'");
  TradeoffSpec spec;
  for (const auto& c : j["columns"]) {
    TradeoffColumn col;
    col.label = c.value("label", "");
    col.r_minus = number_list(c.at("r_minus"), "r_minus");
    col.r_plus = number_list(c.at("r_plus"), "r_plus");
    if (col.r_minus.size() != m || col.r_plus.size() != s)
      throw DimensionMismatch("trade-off column '" + col.label +
                              "' has wrong dimensions");
    spec.columns.push_back(std::move(col));
  }
  return spec;
}

std::string tradeoffs_to_json(const TradeoffSpec& spec) {
  json cols = json::array();
  for (const TradeoffColumn& c : spec.columns) {
    json col;
    col["label"] = c.label;
    col["r_minus"] = c.r_minus;
    col["r_plus"] = c.r_plus;
    cols.push_back(std::move(col));
  }
  json j;
  j["columns"] = std::move(cols);
  return j.dump(2) + "\n";
}

TradeoffSpec build_olympic_tradeoffs(const Dataset& dataset,
                                     const std::vector<int>& top_set, int hub) {
  const int n = static_cast<int>(dataset.n());
  std::set<int> top(top_set.begin(), top_set.end());
  for (int id : top_set)
    if (id < 1 || id > n) throw InvalidIds("top-set id out of range: " + std::to_string(id));
  if (top.size() != top_set.size()) throw InvalidIds("top set contains duplicates");
  if (top.find(hub) == top.end())
    throw InvalidIds("hub id must belong to the top set");

  TradeoffSpec spec;
  auto pair_column = [&](int p, int q) {
    const Dmu& dp = dataset.by_id(p);
    const Dmu& dq = dataset.by_id(q);
    TradeoffColumn col;
    col.label = std::to_string(p) + "->" + std::to_string(q);
    col.r_minus.resize(dataset.m);
    col.r_plus.resize(dataset.s);
    for (std::size_t i = 0; i < dataset.m; ++i) col.r_minus[i] = dp.x[i] - dq.x[i];
    for (std::size_t r = 0; r < dataset.s; ++r) col.r_plus[r] = dp.y[r] - dq.y[r];
    spec.columns.push_back(std::move(col));
  };

  for (int p = 1; p <= n; ++p) {
    if (top.count(p)) continue;
    for (int q : top_set) pair_column(p, q);
  }
  for (int p : top_set)
    if (p != hub) pair_column(p, hub);

  // Silver-to-bronze swap at constant inputs.
  if (dataset.s < 3)
    throw DimensionMismatch("the swap column needs silver and bronze output columns");
  TradeoffColumn swap;
  swap.label = "0->0";
  swap.r_minus.assign(dataset.m, 0.0);
  swap.r_plus.assign(dataset.s, 0.0);
  swap.r_plus[1] = -1.0;
  swap.r_plus[2] = 1.0;
  spec.columns.push_back(std::move(swap));
  return spec;
}

CaseStudyConfig load_case_config(const std::string& path) {
  const json j = load_json(path);
  CaseStudyConfig cfg;
  cfg.top_set = j.at("top_set").get<std::vector<int>>();
  cfg.hub = j.at("hub").get<int>();
  cfg.b11 = j.value("b11", std::vector<int>{});
  cfg.efficient_set_vrs = j.value("efficient_set_vrs", std::vector<int>{});
  return cfg;
}

}  // namespace dea
