#include "dea/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

namespace dea {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_number(const std::string& text, int row, const std::string& column) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
  while (end > begin && (*(end - 1) == ' ' || *(end - 1) == '\t')) --end;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw NonFiniteValue("row " + std::to_string(row) + ", column " + column +
                         ": cannot parse '" + text + "' as a number");
  if (!std::isfinite(value))
    throw NonFiniteValue("row " + std::to_string(row) + ", column " + column +
                         ": value is not finite");
  return value;
}

}  // namespace

RawTable parse_csv(std::istream& in) {
  RawTable table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
    auto fields = split_csv_line(line);
    if (first) {
      table.header = std::move(fields);
      first = false;
    } else {
      table.rows.push_back(std::move(fields));
    }
  }
  return table;
}

RawTable parse_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open dataset file: " + path);
  return parse_csv(in);
}

Dataset validate_dataset(const RawTable& raw) {
  if (raw.header.size() < 4 || raw.header[0] != "dmu" || raw.header[1] != "name")
    throw DataError("dataset header must start with 'dmu,name' followed by x_/y_ columns");

  Dataset ds;
  std::size_t col = 2;
  for (; col < raw.header.size() && raw.header[col].rfind("x_", 0) == 0; ++col)
    ds.input_labels.push_back(raw.header[col].substr(2));
  const std::size_t y_start = col;
  for (; col < raw.header.size() && raw.header[col].rfind("y_", 0) == 0; ++col)
    ds.output_labels.push_back(raw.header[col].substr(2));
  if (col != raw.header.size())
    throw DataError("unexpected dataset column '" + raw.header[col] + "'");
  ds.m = ds.input_labels.size();
  ds.s = ds.output_labels.size();
  if (ds.m == 0 || ds.s == 0)
    throw DataError("dataset needs at least one x_ column and one y_ column");
  if (raw.rows.empty()) throw EmptyDataset("dataset has no rows");

  std::set<std::string> names;
  int expected_id = 1;
  for (const auto& cells : raw.rows) {
    if (cells.size() != raw.header.size())
      throw DataError("row " + std::to_string(expected_id) +
                      " has wrong number of columns");
    Dmu dmu;
    dmu.id = static_cast<int>(parse_number(cells[0], expected_id, "dmu"));
    if (dmu.id != expected_id)
      throw DataError("DMU ids must run 1..n in order; saw " + cells[0] +
                      " at row " + std::to_string(expected_id));
    dmu.name = cells[1];
    if (!names.insert(dmu.name).second)
      throw DuplicateName("duplicate DMU name: " + dmu.name);
    for (std::size_t j = 0; j < ds.m; ++j) {
      const double v = parse_number(cells[2 + j], dmu.id, raw.header[2 + j]);
      if (v < 0.0)
        throw NegativeValue("DMU " + dmu.name + ": negative input " +
                            raw.header[2 + j]);
      dmu.x.push_back(v);
    }
    for (std::size_t r = 0; r < ds.s; ++r) {
      const double v = parse_number(cells[y_start + r], dmu.id, raw.header[y_start + r]);
      if (v < 0.0)
        throw NegativeValue("DMU " + dmu.name + ": negative output " +
                            raw.header[y_start + r]);
      dmu.y.push_back(v);
    }
    if (std::all_of(dmu.x.begin(), dmu.x.end(), [](double v) { return v == 0.0; }))
      throw ZeroVector("DMU " + dmu.name + ": input vector is all zero");
    if (std::all_of(dmu.y.begin(), dmu.y.end(), [](double v) { return v == 0.0; }))
      throw ZeroVector("DMU " + dmu.name + ": output vector is all zero");
    ds.dmus.push_back(std::move(dmu));
    ++expected_id;
  }
  return ds;
}

Dataset load_dataset(const std::string& path) {
  return validate_dataset(parse_csv_file(path));
}

void write_dataset_csv(std::ostream& out, const Dataset& ds) {
  out << "dmu,name";
  for (const auto& l : ds.input_labels) out << ",x_" << l;
  for (const auto& l : ds.output_labels) out << ",y_" << l;
  out << "\n";
  std::ostringstream num;
  num.precision(17);
  for (const Dmu& dmu : ds.dmus) {
    out << dmu.id << "," << dmu.name;
    for (double v : dmu.x) {
      num.str("");
      num << v;
      out << "," << num.str();
    }
    for (double v : dmu.y) {
      num.str("");
      num << v;
      out << "," << num.str();
    }
    out << "\n";
  }
}

IndexSets index_sets(const std::vector<double>& x, const std::vector<double>& y) {
  IndexSets sets;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > 0.0) sets.positive_inputs.push_back(i);
  for (std::size_t r = 0; r < y.size(); ++r)
    if (y[r] > 0.0) sets.positive_outputs.push_back(r);
  return sets;
}

}  // namespace dea
