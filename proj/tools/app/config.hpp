#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "nhq/errors.hpp"
#include "nhq/linearity.hpp"
#include "nhq/measurement.hpp"
#include "nhq/params.hpp"

namespace nhq::cli {

/// Unreadable, malformed or out-of-range run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct TimeSettings {
  double horizon = 6.0;         // us
  double dt = 0.05;             // output grid spacing, us
  double integrator_dt = 1e-3;  // RK4 / trajectory step, us
};

/// Coupling grid: `steps` evenly spaced values from min to max inclusive.
struct SweepSettings {
  double min = 0.0;
  double max = 0.0;
  int steps = 1;

  std::vector<double> values() const;
};

/// Which preparations the linearity command scans.
enum class InitialSelection { plus_x, plus_y, both };

struct RunConfig {
  SystemParams params{kDeviceGammaE, kDeviceGammaF, 0.5, 0.0};
  TimeSettings time;
  std::optional<SweepSettings> sweep;
  std::int64_t shots = 4096;  // 0 = exact probabilities
  std::uint64_t seed = 0;
  SimulationMode mode = SimulationMode::ideal;
  std::string output_dir = ".";
  std::optional<std::string> output_name;
  InitialSelection initial_state = InitialSelection::both;

  /// "paper", "identity", or "custom" with explicit rows.
  std::string beta_source = "paper";
  ConfusionMatrix::Rows beta_rows{};

  ConfusionMatrix beta() const;
  std::vector<double> times() const;
  /// Sweep values, or the single configured coupling.
  std::vector<double> couplings() const;
  std::vector<InitialState> initial_states() const;
  MeasuredPipeline pipeline(std::uint64_t seed) const;

  /// Every field, defaults included, in the input schema.
  nlohmann::ordered_json to_json() const;
};

/// Parses one JSON document. Unknown keys, wrong types and violated
/// invariants throw ConfigError naming the field, or the line and column for
/// syntax errors.
RunConfig parse_config(std::string_view text);

RunConfig load_config(const std::filesystem::path& path);

}  // namespace nhq::cli
