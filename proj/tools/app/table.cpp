#include "table.hpp"

#include <array>
#include <charconv>
#include <ostream>

#include "nhq/errors.hpp"

namespace nhq::cli {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string format_double(double v) {
  if (v == 0.0) return "0";  // drops the sign of -0
  std::array<char, 32> buf{};
  const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 15);
  return std::string(buf.data(), r.ptr);
}

}  // namespace

SweepTable::SweepTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw InvalidArgument("table needs at least one column");
}

void SweepTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) {
    throw InvalidArgument("row has " + std::to_string(row.size()) + " cells, table has " +
                          std::to_string(columns_.size()) + " columns");
  }
  rows_.push_back(std::move(row));
}

void SweepTable::add_note(std::string key, std::string value) {
  notes_.emplace_back(std::move(key), std::move(value));
}

std::string format_cell(const Cell& cell) {
  return std::visit(
      Overloaded{[](Blank) { return std::string(); }, [](double v) { return format_double(v); },
                 [](std::int64_t v) { return std::to_string(v); }, [](const std::string& s) { return s; }},
      cell);
}

void SweepTable::write_csv(std::ostream& out) const {
  for (const auto& [key, value] : notes_) out << "# " << key << ": " << value << '\n';
  for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_cell(row[i]);
    out << '\n';
  }
}

}  // namespace nhq::cli
