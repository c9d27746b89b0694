#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dea/types.hpp"

namespace dea {

// A parsed-but-unchecked table: header fields plus rows of cell strings.
struct RawTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

RawTable parse_csv(std::istream& in);
RawTable parse_csv_file(const std::string& path);

// Turns a raw table with header `dmu,name,x_<label>...,y_<label>...` into a
// validated Dataset. Column order defines coordinate order; m and s are
// inferred from the x_/y_ prefixes. Values are parsed as decimal text into
// binary64 with no unit normalization.
Dataset validate_dataset(const RawTable& raw);

Dataset load_dataset(const std::string& path);

void write_dataset_csv(std::ostream& out, const Dataset& dataset);

}  // namespace dea
