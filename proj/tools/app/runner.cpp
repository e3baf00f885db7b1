#include "runner.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "commands.hpp"

#ifndef NHQ_VERSION
#define NHQ_VERSION "unknown"
#endif

namespace nhq::cli {

namespace {

struct Options {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  bool exact = false;
  std::string counts_path;
};

RunConfig effective_config(const Options& o) {
  RunConfig c = o.config_path.empty() ? RunConfig{} : load_config(o.config_path);
  if (o.seed) c.seed = *o.seed;
  if (!o.out_dir.empty()) c.output_dir = o.out_dir;
  if (o.exact) c.shots = 0;
  return c;
}

std::vector<std::filesystem::path> dispatch(const std::string& command, const Options& o,
                                            const RunConfig& c) {
  const std::string stem = output_stem(command, c, utc_timestamp());
  if (command == "trajectories") {
    const TrajectoryTables t = cmd_trajectories(c);
    return write_tables(command, c, stem, {{"", &t.trajectories}, {"-aggregate", &t.aggregate}});
  }
  SweepTable table = [&] {
    if (command == "spectrum") return cmd_spectrum(c);
    if (command == "sweep") return cmd_sweep(c);
    if (command == "fpt") return cmd_fpt(c);
    if (command == "linearity") return cmd_linearity(c);
    if (command == "mixture") return cmd_mixture(c);
    return cmd_ingest(o.counts_path, c);
  }();
  return write_tables(command, c, stem, {{"", &table}});
}

}  // namespace

std::string output_stem(std::string_view command, const RunConfig& config, std::string_view timestamp) {
  if (config.output_name) return *config.output_name;
  return std::string(command) + "-" + std::string(timestamp) + "-" + std::to_string(config.seed);
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y%m%dT%H%M%SZ", &utc);
  return buf;
}

std::vector<std::filesystem::path> write_tables(std::string_view command, const RunConfig& config,
                                                const std::string& stem,
                                                const std::vector<NamedTable>& tables) {
  const std::filesystem::path dir(config.output_dir);
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> paths;
  for (const NamedTable& t : tables) {
    const std::filesystem::path path = dir / (stem + t.suffix + ".csv");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "# nhq " << NHQ_VERSION << '\n'
        << "# command: " << command << '\n'
        << "# seed: " << config.seed << '\n'
        << "# config: " << config.to_json().dump() << '\n';
    t.table->write_csv(out);
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + path.string());
    paths.push_back(path);
  }
  return paths;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Postselected qutrit simulator: spectra, dynamics, linearity tests and tomography"};
  app.set_version_flag("--version", NHQ_VERSION);
  app.require_subcommand(1);

  Options o;
  app.add_option("--config", o.config_path, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--seed", o.seed, "Master seed (overrides the config)");
  app.add_option("--out", o.out_dir, "Output directory (overrides the config)");
  app.add_flag("--exact", o.exact, "Exact probabilities instead of sampled shots (shots = 0)");

  const std::vector<std::pair<std::string, std::string>> verbs{
      {"spectrum", "Eigenvalues and PT regime over the J sweep"},
      {"sweep", "P(+z) and postselected Pn(+z) from |e> over J and t"},
      {"fpt", "First passage time |e> -> |f> over the J sweep"},
      {"linearity", "OFS linearity scan and renormalization ratio"},
      {"mixture", "Classical-mixture linearity test, 2-level vs 3-level"},
      {"trajectories", "Quantum-jump trajectories and postselection statistics"},
      {"ingest", "Correct and reconstruct tomography counts from a CSV file"}};
  for (const auto& [name, help] : verbs) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    if (name == "ingest") sub->add_option("counts", o.counts_path, "Counts CSV")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const RunConfig config = effective_config(o);
    for (const auto& path : dispatch(command, o, config)) out << path.string() << '\n';
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const InvalidArgument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace nhq::cli
