#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "config.hpp"
#include "table.hpp"

namespace nhq::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitConfig = 2,
  kExitData = 3,
  kExitNumerical = 4,
};

/// `<command>-<timestamp>-<seed>`, or the configured output name.
std::string output_stem(std::string_view command, const RunConfig& config, std::string_view timestamp);

/// UTC time as 20261018T120000Z.
std::string utc_timestamp();

struct NamedTable {
  std::string suffix;  // appended to the stem, e.g. "-aggregate"
  const SweepTable* table;
};

/// Writes each table to `<dir>/<stem><suffix>.csv` behind the shared
/// metadata preamble and returns the paths.
std::vector<std::filesystem::path> write_tables(std::string_view command, const RunConfig& config,
                                                const std::string& stem,
                                                const std::vector<NamedTable>& tables);

/// Full command line: parse, run, write, map errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nhq::cli
