#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <vector>

#include "nhq/measurement.hpp"

namespace nhq {

/// One row of a counts file: `axis,shots,n_g,n_plus,n_minus`, optionally
/// preceded by a time column `t` (us).
struct CountsRow {
  std::size_t line;  // 1-based line number in the source
  std::optional<double> time;
  CountsRecord record;
};

/// Parses a counts CSV (UTF-8, LF). Blank lines and lines starting with '#'
/// are skipped. Throws DataError naming the line, or the missing column,
/// for malformed input, zero shots, or counts that do not add up to shots.
std::vector<CountsRow> read_counts_csv(std::istream& in);

void write_counts_csv(std::ostream& out, const std::vector<CountsRow>& rows);

/// A complete tomography point: one record per axis, ordered x, y, z.
struct CountsGroup {
  std::size_t first_line;
  std::optional<double> time;
  std::array<CountsRecord, 3> records;
};

/// Groups rows into (x, y, z) triples. With a time column rows are grouped
/// by equal time; otherwise consecutive rows form a group and a repeated
/// axis starts the next one. Throws DataError for incomplete groups.
std::vector<CountsGroup> group_counts(const std::vector<CountsRow>& rows);

}  // namespace nhq
