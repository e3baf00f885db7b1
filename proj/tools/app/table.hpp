#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace nhq::cli {

/// Empty cell, e.g. a first passage time that does not exist.
struct Blank {};

using Cell = std::variant<Blank, double, std::int64_t, std::string>;

/// Column headers plus rows, written as CSV after a `#` preamble.
class SweepTable {
 public:
  explicit SweepTable(std::vector<std::string> columns);

  /// Throws InvalidArgument unless the row has one cell per column.
  void add_row(std::vector<Cell> row);

  /// Extra `# key: value` line placed after the shared preamble.
  void add_note(std::string key, std::string value);

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }
  const std::vector<std::pair<std::string, std::string>>& notes() const noexcept { return notes_; }

  /// Writes notes, header and rows. Doubles use 15 significant digits.
  void write_csv(std::ostream& out) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
  std::vector<std::pair<std::string, std::string>> notes_;
};

std::string format_cell(const Cell& cell);

}  // namespace nhq::cli
