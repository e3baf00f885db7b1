#include "nhq/counts_csv.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "nhq/errors.hpp"

namespace nhq {

namespace {

constexpr std::array<std::string_view, 5> kRequiredColumns{"axis", "shots", "n_g", "n_plus",
                                                           "n_minus"};
constexpr std::string_view kTimeColumn = "t";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw DataError("counts CSV line " + std::to_string(line) + ": " + what);
}

std::int64_t parse_int(std::string_view field, std::size_t line, std::string_view column) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
    fail(line, "column '" + std::string(column) + "' is not an integer: '" + std::string(field) + "'");
  }
  return value;
}

double parse_double(std::string_view field, std::size_t line, std::string_view column) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
    fail(line, "column '" + std::string(column) + "' is not a number: '" + std::string(field) + "'");
  }
  return value;
}

bool skippable(std::string_view line) {
  const std::string_view t = trim(line);
  return t.empty() || t.front() == '#';
}

}  // namespace

std::vector<CountsRow> read_counts_csv(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;

  std::map<std::string, std::size_t, std::less<>> columns;
  std::size_t header_width = 0;
  bool have_header = false;
  std::vector<CountsRow> rows;

  while (std::getline(in, text)) {
    ++line_no;
    if (skippable(text)) continue;
    const std::vector<std::string_view> fields = split(text);

    if (!have_header) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        const std::string name(fields[i]);
        const bool known = name == kTimeColumn ||
                           std::find(kRequiredColumns.begin(), kRequiredColumns.end(), name) !=
                               kRequiredColumns.end();
        if (!known) fail(line_no, "unknown column '" + name + "'");
        if (!columns.emplace(name, i).second) fail(line_no, "duplicate column '" + name + "'");
      }
      for (std::string_view required : kRequiredColumns) {
        if (!columns.contains(required)) {
          fail(line_no, "header is missing column '" + std::string(required) + "'");
        }
      }
      header_width = fields.size();
      have_header = true;
      continue;
    }

    if (fields.size() != header_width) {
      fail(line_no, "expected " + std::to_string(header_width) + " fields, found " +
                        std::to_string(fields.size()));
    }
    auto field = [&](std::string_view name) { return fields[columns.find(name)->second]; };

    CountsRow row;
    row.line = line_no;
    try {
      row.record.axis = parse_axis(field("axis"));
    } catch (const InvalidArgument&) {
      fail(line_no, "unknown axis '" + std::string(field("axis")) + "'");
    }
    row.record.shots = parse_int(field("shots"), line_no, "shots");
    row.record.counts = {parse_int(field("n_g"), line_no, "n_g"),
                         parse_int(field("n_plus"), line_no, "n_plus"),
                         parse_int(field("n_minus"), line_no, "n_minus")};
    if (columns.contains(kTimeColumn)) {
      row.time = parse_double(field(kTimeColumn), line_no, kTimeColumn);
    }
    if (row.record.shots <= 0) fail(line_no, "shots must be positive");
    std::int64_t total = 0;
    for (std::int64_t c : row.record.counts) {
      if (c < 0) fail(line_no, "counts must be nonnegative");
      total += c;
    }
    if (total != row.record.shots) {
      fail(line_no, "counts add up to " + std::to_string(total) + " but shots is " +
                        std::to_string(row.record.shots));
    }
    rows.push_back(row);
  }
  if (!have_header) {
    throw DataError("counts CSV: missing header (expected columns axis,shots,n_g,n_plus,n_minus)");
  }
  return rows;
}

void write_counts_csv(std::ostream& out, const std::vector<CountsRow>& rows) {
  const bool timed = std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.time.has_value(); });
  if (timed) out << "t,";
  out << "axis,shots,n_g,n_plus,n_minus\n";
  for (const auto& r : rows) {
    if (r.record.exact) throw InvalidArgument("exact (zero-shot) records have no counts to write");
    if (timed) {
      char buf[64];
      const auto res = std::to_chars(buf, buf + sizeof buf, r.time.value_or(0.0));
      out << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)) << ',';
    }
    out << to_string(r.record.axis) << ',' << r.record.shots << ',' << r.record.counts[0] << ','
        << r.record.counts[1] << ',' << r.record.counts[2] << '\n';
  }
}

std::vector<CountsGroup> group_counts(const std::vector<CountsRow>& rows) {
  std::vector<CountsGroup> groups;
  const bool timed = !rows.empty() && rows.front().time.has_value();

  struct Pending {
    CountsGroup group;
    std::array<bool, 3> seen{false, false, false};
  };
  std::vector<Pending> pending;

  auto finish = [&](const Pending& p) {
    for (int a = 0; a < 3; ++a) {
      if (!p.seen[a]) {
        fail(p.group.first_line, "tomography group is missing axis '" +
                                     std::string(to_string(static_cast<Axis>(a))) + "'");
      }
    }
    groups.push_back(p.group);
  };

  for (const auto& row : rows) {
    const int a = static_cast<int>(row.record.axis);
    Pending* target = nullptr;
    if (timed) {
      for (auto& p : pending)
        if (p.group.time == row.time) target = &p;
    } else if (!pending.empty() && !pending.back().seen[a]) {
      target = &pending.back();
    }
    if (target == nullptr) {
      pending.push_back(Pending{CountsGroup{row.line, row.time, {}}, {false, false, false}});
      target = &pending.back();
    } else if (target->seen[a]) {
      fail(row.line, "axis '" + std::string(to_string(row.record.axis)) + "' repeated for t = " +
                         std::to_string(row.time.value_or(0.0)));
    }
    target->group.records[a] = row.record;
    target->seen[a] = true;
  }
  for (const auto& p : pending) finish(p);
  return groups;
}

}  // namespace nhq
