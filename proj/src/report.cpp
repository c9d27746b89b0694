#include "dea/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace dea::report {

double round_half_away(double v, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(v * scale) / scale;
}

std::string side_name(measures::Side side) {
  switch (side) {
    case measures::Side::kInput: return "input";
    case measures::Side::kOutput: return "output";
    case measures::Side::kEfficient: return "efficient";
  }
  return "";
}

namespace {

std::string fmt(double v, int decimals, bool full_precision) {
  char buf[64];
  if (full_precision)
    std::snprintf(buf, sizeof buf, "%.17g", v);
  else
    std::snprintf(buf, sizeof buf, "%.*f", decimals, round_half_away(v, decimals));
  return buf;
}

}  // namespace

std::string to_csv(const std::vector<Row>& rows, bool full_precision) {
  std::ostringstream out;
  out << "dmu,name,score,side,target_coord,target_value,score_fgl,zero_input_target\n";
  for (const Row& r : rows) {
    out << r.id << ',' << r.name << ',';
    if (r.score_maxrgm) out << fmt(*r.score_maxrgm, 3, full_precision);
    out << ',';
    if (r.side) out << side_name(*r.side);
    out << ',' << r.target_coord << ',';
    if (r.target_value) out << fmt(*r.target_value, 1, full_precision);
    out << ',';
    if (r.score_fgl) out << fmt(*r.score_fgl, 3, full_precision);
    out << ',';
    if (r.zero_input_target) out << (*r.zero_input_target ? 1 : 0);
    out << '\n';
  }
  return out.str();
}

Row make_row(const Dataset& ds, const Dmu& dmu,
             const measures::MaxRgmResult* rgm, const measures::FglResult* fgl) {
  Row row;
  row.id = dmu.id;
  row.name = dmu.name;
  if (rgm) {
    row.score_maxrgm = rgm->score;
    row.side = rgm->side;
    if (rgm->coordinate) {
      const std::size_t c = *rgm->coordinate;
      if (rgm->side == measures::Side::kInput) {
        row.target_coord = "x_" + ds.input_labels[c];
        row.target_value = rgm->target_x[c];
      } else {
        row.target_coord = "y_" + ds.output_labels[c];
        row.target_value = rgm->target_y[c];
      }
    }
  }
  if (fgl) {
    row.score_fgl = fgl->score;
    row.zero_input_target = fgl->zero_input_target;
  }
  return row;
}

}  // namespace dea::report
