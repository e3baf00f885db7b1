#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>

#include "nhq/grid.hpp"

namespace nhq::cli {

namespace {

using nlohmann::json;

std::string field(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError((path.empty() ? "config" : path) + ": expected an object");
}

void check_keys(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
  for (const auto& item : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      throw ConfigError(field(path, item.key()) + ": unknown key");
    }
  }
}

double read_number(const json& obj, std::string_view key, const std::string& path, double fallback) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number()) throw ConfigError(field(path, key) + ": expected a number");
  const double v = it->get<double>();
  if (!std::isfinite(v)) throw ConfigError(field(path, key) + ": must be finite");
  return v;
}

std::int64_t read_integer(const json& obj, std::string_view key, const std::string& path,
                          std::int64_t fallback) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number_integer()) throw ConfigError(field(path, key) + ": expected an integer");
  if (it->is_number_unsigned() &&
      it->get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw ConfigError(field(path, key) + ": out of range");
  }
  return it->get<std::int64_t>();
}

std::string read_string(const json& obj, std::string_view key, const std::string& path,
                        std::string fallback) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_string()) throw ConfigError(field(path, key) + ": expected a string");
  return it->get<std::string>();
}

void parse_params(const json& j, RunConfig& c) {
  const std::string path = "params";
  require_object(j, path);
  check_keys(j, path, {"gamma_e", "gamma_f", "coupling", "detuning"});
  c.params.gamma_e = read_number(j, "gamma_e", path, c.params.gamma_e);
  c.params.gamma_f = read_number(j, "gamma_f", path, c.params.gamma_f);
  c.params.coupling = read_number(j, "coupling", path, c.params.coupling);
  c.params.detuning = read_number(j, "detuning", path, c.params.detuning);
  try {
    c.params.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void parse_time(const json& j, RunConfig& c) {
  const std::string path = "time";
  require_object(j, path);
  check_keys(j, path, {"horizon", "dt", "integrator_dt"});
  c.time.horizon = read_number(j, "horizon", path, c.time.horizon);
  c.time.dt = read_number(j, "dt", path, c.time.dt);
  c.time.integrator_dt = read_number(j, "integrator_dt", path, c.time.integrator_dt);
  if (!(c.time.horizon > 0.0)) throw ConfigError("time.horizon: must be > 0");
  if (!(c.time.dt > 0.0)) throw ConfigError("time.dt: must be > 0");
  if (!(c.time.integrator_dt > 0.0)) throw ConfigError("time.integrator_dt: must be > 0");
  if (c.time.horizon / c.time.dt > 1e6) throw ConfigError("time.dt: more than 1e6 grid points");
}

void parse_sweep(const json& j, RunConfig& c) {
  const std::string path = "sweep";
  require_object(j, path);
  check_keys(j, path, {"min", "max", "steps"});
  for (std::string_view k : {"min", "max", "steps"}) {
    if (!j.contains(k)) throw ConfigError(field(path, k) + ": missing");
  }
  SweepSettings s;
  s.min = read_number(j, "min", path, 0.0);
  s.max = read_number(j, "max", path, 0.0);
  const std::int64_t steps = read_integer(j, "steps", path, 1);
  if (steps < 1 || steps > 100000) throw ConfigError("sweep.steps: must be in [1, 100000]");
  s.steps = static_cast<int>(steps);
  if (s.min < 0.0) throw ConfigError("sweep.min: coupling must be >= 0");
  if (s.steps == 1 && s.max != s.min) throw ConfigError("sweep: steps = 1 requires min == max");
  if (s.steps > 1 && !(s.max > s.min)) throw ConfigError("sweep: J grid must be ascending (max > min)");
  c.sweep = s;
}

void parse_beta(const json& j, RunConfig& c) {
  if (j.is_string()) {
    const std::string label = j.get<std::string>();
    if (label != "paper" && label != "identity") {
      throw ConfigError("beta: expected \"paper\", \"identity\" or a 3x3 array");
    }
    c.beta_source = label;
    return;
  }
  if (!j.is_array() || j.size() != 3) throw ConfigError("beta: expected a 3x3 array");
  for (std::size_t i = 0; i < 3; ++i) {
    if (!j[i].is_array() || j[i].size() != 3)
      throw ConfigError("beta[" + std::to_string(i) + "]: expected 3 entries");
    for (std::size_t k = 0; k < 3; ++k) {
      if (!j[i][k].is_number()) {
        throw ConfigError("beta[" + std::to_string(i) + "][" + std::to_string(k) + "]: expected a number");
      }
      c.beta_rows[i][k] = j[i][k].get<double>();
    }
  }
  try {
    ConfusionMatrix::from_rows(c.beta_rows);
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("beta: ") + e.what());
  }
  c.beta_source = "custom";
}

InitialSelection parse_selection(const std::string& label) {
  if (label == "both") return InitialSelection::both;
  try {
    return parse_initial_state(label) == InitialState::plus_x ? InitialSelection::plus_x
                                                              : InitialSelection::plus_y;
  } catch (const InvalidArgument&) {
    throw ConfigError("initial_state: expected \"+x\", \"+y\" or \"both\"");
  }
}

std::string_view to_string(InitialSelection s) {
  switch (s) {
    case InitialSelection::plus_x:
      return "+x";
    case InitialSelection::plus_y:
      return "+y";
    case InitialSelection::both:
      return "both";
  }
  return "both";
}

}  // namespace

std::vector<double> SweepSettings::values() const {
  std::vector<double> out;
  out.reserve(steps);
  if (steps == 1) {
    out.push_back(min);
    return out;
  }
  const double step = (max - min) / (steps - 1);
  for (int i = 0; i < steps - 1; ++i) out.push_back(min + step * i);
  out.push_back(max);
  return out;
}

ConfusionMatrix RunConfig::beta() const {
  if (beta_source == "paper") return paper_beta();
  if (beta_source == "identity") return ConfusionMatrix::identity();
  return ConfusionMatrix::from_rows(beta_rows);
}

std::vector<double> RunConfig::times() const { return uniform_grid(time.horizon, time.dt); }

std::vector<double> RunConfig::couplings() const {
  if (sweep) return sweep->values();
  return {params.coupling};
}

std::vector<InitialState> RunConfig::initial_states() const {
  switch (initial_state) {
    case InitialSelection::plus_x:
      return {InitialState::plus_x};
    case InitialSelection::plus_y:
      return {InitialState::plus_y};
    case InitialSelection::both:
      break;
  }
  return {InitialState::plus_x, InitialState::plus_y};
}

MeasuredPipeline RunConfig::pipeline(std::uint64_t stream_seed) const {
  MeasuredPipeline p;
  p.beta = beta();
  p.shots = shots;
  p.seed = stream_seed;
  p.integrator_dt = time.integrator_dt;
  return p;
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["params"] = {{"gamma_e", params.gamma_e},
                 {"gamma_f", params.gamma_f},
                 {"coupling", params.coupling},
                 {"detuning", params.detuning}};
  j["time"] = {{"horizon", time.horizon}, {"dt", time.dt}, {"integrator_dt", time.integrator_dt}};
  if (sweep) j["sweep"] = {{"min", sweep->min}, {"max", sweep->max}, {"steps", sweep->steps}};
  j["shots"] = shots;
  j["seed"] = seed;
  j["mode"] = std::string(to_string(mode));
  j["initial_state"] = std::string(to_string(initial_state));
  if (beta_source == "custom") {
    j["beta"] = beta_rows;
  } else {
    j["beta"] = beta_source;
  }
  j["output_dir"] = output_dir;
  if (output_name) j["output_name"] = *output_name;
  return j;
}

RunConfig parse_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(e.what());
  }
  require_object(j, "");
  check_keys(j, "",
             {"params", "time", "sweep", "shots", "seed", "mode", "initial_state", "beta", "output_dir",
              "output_name"});

  RunConfig c;
  if (j.contains("params")) parse_params(j["params"], c);
  if (j.contains("time")) parse_time(j["time"], c);
  if (j.contains("sweep")) parse_sweep(j["sweep"], c);
  if (j.contains("beta")) parse_beta(j["beta"], c);

  c.shots = read_integer(j, "shots", "", c.shots);
  if (c.shots < 0) throw ConfigError("shots: must be >= 0");
  if (j.contains("seed")) {
    const json& s = j["seed"];
    if (!s.is_number_unsigned()) throw ConfigError("seed: expected a nonnegative integer");
    c.seed = s.get<std::uint64_t>();
  }
  try {
    c.mode = parse_simulation_mode(read_string(j, "mode", "", "ideal"));
  } catch (const InvalidArgument&) {
    throw ConfigError("mode: expected \"ideal\" or \"measured\"");
  }
  c.initial_state = parse_selection(read_string(j, "initial_state", "", "both"));
  c.output_dir = read_string(j, "output_dir", "", c.output_dir);
  if (j.contains("output_name")) {
    c.output_name = read_string(j, "output_name", "", "");
    if (c.output_name->empty() || c.output_name->find('/') != std::string::npos) {
      throw ConfigError("output_name: must be a nonempty file stem without '/'");
    }
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_config(buffer.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

}  // namespace nhq::cli
