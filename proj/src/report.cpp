#include "hartogs/report.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hartogs/error.hpp"

namespace hartogs {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string format_cell(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  return std::to_string(std::get<std::int64_t>(c));
}

std::size_t Table::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  fail(ErrorKind::Usage, "no column named '" + name + "'");
}

double Table::number(std::size_t row, std::size_t col) const {
  if (row >= rows.size() || col >= columns.size()) fail(ErrorKind::Usage, "cell out of range");
  const Cell& c = rows[row][col];
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
  fail(ErrorKind::Usage, "cell is not numeric");
}

std::string Table::text(std::size_t row, std::size_t col) const {
  if (row >= rows.size() || col >= columns.size()) fail(ErrorKind::Usage, "cell out of range");
  return format_cell(rows[row][col]);
}

void write_csv(const Table& table, std::ostream& os) {
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    os << (i ? "," : "") << table.columns[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_cell(row[i]);
    os << '\n';
  }
}

std::string to_csv(const Table& table) {
  std::ostringstream os;
  write_csv(table, os);
  return os.str();
}

void write_csv_file(const Table& table, const std::string& path) {
  if (path == "-") {
    write_csv(table, std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::Io, "cannot open '" + path + "' for writing");
  write_csv(table, out);
  out.close();
  if (!out) fail(ErrorKind::Io, "failed writing '" + path + "'");
}

}  // namespace hartogs
