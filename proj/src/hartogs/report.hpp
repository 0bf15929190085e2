#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace hartogs {

using Cell = std::variant<std::string, double, std::int64_t>;

/// Column-ordered table. Rendered as UTF-8 CSV with a header row, comma
/// separators and LF line endings; doubles use 17 significant digits.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  std::size_t column_index(const std::string& name) const;
  /// Numeric value of a double or integer cell. Throws Error(Usage) for text.
  double number(std::size_t row, std::size_t col) const;
  std::string text(std::size_t row, std::size_t col) const;
};

/// %.17g-equivalent, locale independent.
std::string format_double(double v);

std::string format_cell(const Cell& c);

void write_csv(const Table& table, std::ostream& os);
std::string to_csv(const Table& table);
/// Writes to path; "-" means stdout. Throws Error(Io).
void write_csv_file(const Table& table, const std::string& path);

}  // namespace hartogs
