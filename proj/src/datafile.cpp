#include "ocucb/datafile.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ocucb {
namespace {

constexpr std::string_view kColumnsTag = "columns:";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void parse_failure(std::size_t line, const std::string& what) {
  throw std::runtime_error("data file line " + std::to_string(line) + ": " + what);
}

}  // namespace

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_data_file(std::ostream& out, const DataTable& table) {
  for (const std::string& line : table.metadata) out << "% " << line << '\n';
  out << "% " << kColumnsTag;
  for (const std::string& name : table.columns) out << ' ' << name;
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ' ';
      out << format_number(row[i]);
    }
    out << '\n';
  }
}

std::string to_data_string(const DataTable& table) {
  std::ostringstream out;
  write_data_file(out, table);
  return out.str();
}

DataTable read_data_file(std::istream& in) {
  DataTable table;
  bool have_columns = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '%') {
      std::string_view body = line.substr(1);
      if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
      if (body.starts_with(kColumnsTag)) {
        for (auto name : split_ws(body.substr(kColumnsTag.size()))) table.columns.emplace_back(name);
        have_columns = true;
      } else {
        table.metadata.emplace_back(body);
      }
      continue;
    }
    std::vector<double> row;
    for (auto field : split_ws(line)) {
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc() || ptr != field.data() + field.size()) {
        parse_failure(line_no, "not a number: '" + std::string(field) + "'");
      }
      row.push_back(value);
    }
    if (have_columns && row.size() != table.columns.size()) {
      parse_failure(line_no, "expected " + std::to_string(table.columns.size()) + " fields, got " +
                                 std::to_string(row.size()));
    }
    if (!table.rows.empty() && row.size() != table.rows.front().size()) {
      parse_failure(line_no, "ragged row");
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

DataTable read_data_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open data file " + path);
  return read_data_file(in);
}

}  // namespace ocucb
