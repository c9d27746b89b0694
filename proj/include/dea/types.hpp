#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dea {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Problems with user-supplied data (files, values, ids). CLI exit code 2.
class DataError : public Error {
 public:
  using Error::Error;
};

class NonFiniteValue : public DataError {
 public:
  using DataError::DataError;
};
class NegativeValue : public DataError {
 public:
  using DataError::DataError;
};
class ZeroVector : public DataError {
 public:
  using DataError::DataError;
};
class DuplicateName : public DataError {
 public:
  using DataError::DataError;
};
class EmptyDataset : public DataError {
 public:
  using DataError::DataError;
};
class DimensionMismatch : public DataError {
 public:
  using DataError::DataError;
};
class InvalidIds : public DataError {
 public:
  using DataError::DataError;
};

// Solver-side failures (numerical trouble, unmet convergence). CLI exit code 3.
class SolverError : public Error {
 public:
  using Error::Error;
};

// One decision-making unit: observed input and output quantities.
struct Dmu {
  int id = 0;  // 1-based position in the dataset
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct Dataset {
  std::size_t m = 0;  // number of inputs
  std::size_t s = 0;  // number of outputs
  std::vector<std::string> input_labels;
  std::vector<std::string> output_labels;
  std::vector<Dmu> dmus;

  std::size_t n() const { return dmus.size(); }

  const Dmu& by_id(int id) const {
    if (id < 1 || static_cast<std::size_t>(id) > dmus.size())
      throw InvalidIds("no DMU with id " + std::to_string(id));
    return dmus[static_cast<std::size_t>(id) - 1];
  }
};

// One production trade-off direction: inputs may move by r_minus while
// outputs move by r_plus, both scaled by a common nonnegative weight.
struct TradeoffColumn {
  std::string label;
  std::vector<double> r_minus;  // length m
  std::vector<double> r_plus;   // length s
};

struct TradeoffSpec {
  std::vector<TradeoffColumn> columns;

  std::size_t size() const { return columns.size(); }
  bool empty() const { return columns.empty(); }
};

enum class Rts {
  kVrsTradeoffs,  // variable returns to scale with production trade-offs
  kCrs,           // constant returns to scale (no trade-off columns)
};

// Immutable bundle of dataset, trade-offs and returns-to-scale regime.
// Every LP in the library is assembled from one of these.
class Technology {
 public:
  Technology(Dataset dataset, TradeoffSpec tradeoffs, Rts rts)
      : dataset_(std::move(dataset)), tradeoffs_(std::move(tradeoffs)), rts_(rts) {
    if (rts_ == Rts::kCrs && !tradeoffs_.empty())
      throw DataError("CRS technology cannot carry trade-off columns");
    for (const auto& col : tradeoffs_.columns) {
      if (col.r_minus.size() != dataset_.m || col.r_plus.size() != dataset_.s)
        throw DimensionMismatch("trade-off column '" + col.label +
                                "' does not match dataset dimensions");
    }
  }

  const Dataset& dataset() const { return dataset_; }
  const TradeoffSpec& tradeoffs() const { return tradeoffs_; }
  Rts rts() const { return rts_; }

  std::size_t m() const { return dataset_.m; }
  std::size_t s() const { return dataset_.s; }
  std::size_t n() const { return dataset_.n(); }
  std::size_t k() const { return tradeoffs_.size(); }

 private:
  Dataset dataset_;
  TradeoffSpec tradeoffs_;
  Rts rts_;
};

// Coordinates with strictly positive observed values. Data are exact
// observations, so the sign test is exact, not tolerance-based.
struct IndexSets {
  std::vector<std::size_t> positive_inputs;   // i with x_i > 0
  std::vector<std::size_t> positive_outputs;  // r with y_r > 0
};

IndexSets index_sets(const std::vector<double>& x, const std::vector<double>& y);
inline IndexSets index_sets(const Dmu& dmu) { return index_sets(dmu.x, dmu.y); }

}  // namespace dea
