#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dea/measures.hpp"
#include "dea/types.hpp"

namespace dea::report {

// One line of the evaluation report, mirroring the case-study table layout.
struct Row {
  int id = 0;
  std::string name;
  std::optional<double> score_maxrgm;
  std::optional<measures::Side> side;
  std::string target_coord;  // dataset column label, e.g. "y_gold"
  std::optional<double> target_value;
  std::optional<double> score_fgl;
  std::optional<bool> zero_input_target;
};

// Display rounding is half away from zero at the stated precision.
double round_half_away(double v, int decimals);

// Scores print to 3 decimals and targets to 1; `full_precision` switches to
// shortest round-trip formatting.
std::string to_csv(const std::vector<Row>& rows, bool full_precision);

std::string side_name(measures::Side side);

// Composes a row from measure results; either result may be absent.
Row make_row(const Dataset& ds, const Dmu& dmu,
             const measures::MaxRgmResult* rgm, const measures::FglResult* fgl);

}  // namespace dea::report
