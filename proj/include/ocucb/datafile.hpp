#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ocucb {

/// Whitespace-separated numeric table with '%' comment lines, the layout
/// pgfplots reads with `comment chars={%}`.
///
///   % <metadata line>
///   ...
///   % columns: <name> <name> ...
///   <x> <mean_1> ... <mean_k> <hw_1> ... <hw_k>
///
/// Numbers are written with 17 significant digits so reading a file back
/// recovers every double exactly.
struct DataTable {
  std::vector<std::string> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  friend bool operator==(const DataTable&, const DataTable&) = default;
};

std::string format_number(double value);

void write_data_file(std::ostream& out, const DataTable& table);
std::string to_data_string(const DataTable& table);

/// Throws std::runtime_error naming the offending line on malformed input.
DataTable read_data_file(std::istream& in);
DataTable read_data_file(const std::string& path);

}  // namespace ocucb
