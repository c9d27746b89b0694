#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "dea/lp.hpp"
#include "dea/pps.hpp"
#include "dea/types.hpp"

namespace dea::measures {

// An output-expansion LP came back unbounded mid-evaluation: the frontier
// assumption does not hold for this technology.
class AssumptionViolated : public SolverError {
 public:
  using SolverError::SolverError;
};
class NotInTechnology : public DataError {
 public:
  using DataError::DataError;
};
// The variant's minimization has no optimal solution on this data (the
// boundary problem); the data is refused rather than adjusted.
class NoOptimum : public DataError {
 public:
  using DataError::DataError;
};
class NotConverged : public SolverError {
 public:
  using SolverError::SolverError;
};
class OutOfRange : public DataError {
 public:
  using DataError::DataError;
};

enum class Side { kInput, kOutput, kEfficient };

struct MaxRgmResult {
  double score = 0.0;       // in (1 - 1/(m+s), 1]
  double theta_star = 0.0;  // best single-input contraction (or 1/phi_star)
  double phi_star = 0.0;    // best single-output expansion, >= 1
  Side side = Side::kEfficient;
  std::optional<std::size_t> coordinate;  // attaining input/output, 0-based
  std::vector<double> target_x;
  std::vector<double> target_y;
  std::map<std::size_t, double> input_theta;  // theta_i^min for i in I+(x)
  std::map<std::size_t, double> output_phi;   // phi_r^max for r in I+(y)
};

// Extended max Russell graph measure via m+s single-coordinate LPs:
// phi* = min_r max-expansion, theta* = max_i min-contraction, and
// score = max{(m+s-1+theta*)/(m+s), (m+s-1+1/phi*)/(m+s)}. The target
// differs from the assessed point in at most one coordinate. Ties between
// the two sides go to the output side; ties between coordinates go to the
// smallest index.
MaxRgmResult max_rgm(const Technology& tech, const Dmu& dmu,
                     const lp::Settings& settings = {});
// Point form; additionally verifies membership of (x, y).
MaxRgmResult max_rgm_point(const Technology& tech, const std::vector<double>& x,
                           const std::vector<double>& y,
                           const lp::Settings& settings = {});

enum class FglVariant {
  kClassic,   // delta(x_i), delta(y_r) activity weights
  kModified,  // psi_r activity weights for outputs
  kRussell,   // every coordinate active; requires strictly positive data
};

struct FglResult {
  double score = 0.0;
  std::vector<double> theta;  // length m; 1.0 on pinned coordinates
  std::vector<double> phi;    // length s; 1.0 on pinned coordinates
  std::vector<double> target_x;
  std::vector<double> target_y;
  std::vector<int> psi;  // length s, modified variant only
  bool zero_input_target = false;
  bool converged = false;
  double gap = 0.0;
  // True when some active 1/phi_r term has y_r = 0: the value is an
  // infimum approached but not attained.
  bool infimum_only = false;
};

// Weighted-average Russell-type measure minimized by cutting planes over the
// epigraph of 1/phi (tangents seeded at phi = 1 and at the single-coordinate
// expansion bound, one new tangent per LP iterate).
FglResult fgl(const Technology& tech, const Dmu& dmu, FglVariant variant,
              const lp::Settings& settings = {});

// Output-activity indicator: 1 when y_r > 0, otherwise 1 iff output r can be
// raised above zero inside the technology.
int psi(const Technology& tech, const Dmu& dmu, std::size_t r,
        const lp::Settings& settings = {});

// Rescales a max-RGM score from (1 - 1/(m+s), 1] onto (0, 1].
double normalized_score(double score, std::size_t m, std::size_t s);

}  // namespace dea::measures
