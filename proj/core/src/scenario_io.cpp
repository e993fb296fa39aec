#include "mdaa/scenario_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mdaa {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& known, const char* what) {
  if (!j.is_object()) throw std::invalid_argument(std::string(what) + " must be a JSON object");
  for (const auto& item : j.items()) {
    if (!known.contains(item.key())) {
      throw std::invalid_argument(std::string("unknown ") + what + " field '" + item.key() + "'");
    }
  }
}

template <typename T>
void read(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("field '") + key + "': " + e.what());
  }
}

template <typename Enum, typename Parse>
void read_enum(const json& j, const char* key, Enum& out, Parse parse) {
  if (!j.contains(key)) return;
  if (!j.at(key).is_string()) throw std::invalid_argument(std::string("field '") + key + "' must be a string");
  out = parse(j.at(key).get<std::string>());
}

ScenarioConfig scenario_from(const json& j) {
  static const std::set<std::string> known = {
      "carrier_frequency", "bandwidth_phase1",   "bandwidth_phase2",  "bs_height",
      "ue_height",         "avg_building_height", "bs_rx_antennas",   "ue_tx_antennas",
      "ue_rx_antennas",    "phase1_tx_power",    "phase2_tx_power_per_ue", "power_mode",
      "noise_figure_bs",   "noise_figure_ue",    "mdaa_radius",       "bs_distance",
      "num_collaborators", "rng_seed",           "bs_link_condition", "ue_link_condition",
      "shadowing"};
  reject_unknown(j, known, "scenario");
  ScenarioConfig cfg;
  read(j, "carrier_frequency", cfg.carrier_frequency);
  read(j, "bandwidth_phase1", cfg.bandwidth_phase1);
  read(j, "bandwidth_phase2", cfg.bandwidth_phase2);
  read(j, "bs_height", cfg.bs_height);
  read(j, "ue_height", cfg.ue_height);
  read(j, "avg_building_height", cfg.avg_building_height);
  read(j, "bs_rx_antennas", cfg.bs_rx_antennas);
  read(j, "ue_tx_antennas", cfg.ue_tx_antennas);
  read(j, "ue_rx_antennas", cfg.ue_rx_antennas);
  read(j, "phase1_tx_power", cfg.phase1_tx_power);
  read(j, "phase2_tx_power_per_ue", cfg.phase2_tx_power_per_ue);
  read_enum(j, "power_mode", cfg.power_mode, parse_power_mode);
  read(j, "noise_figure_bs", cfg.noise_figure_bs);
  read(j, "noise_figure_ue", cfg.noise_figure_ue);
  read(j, "mdaa_radius", cfg.mdaa_radius);
  read(j, "bs_distance", cfg.bs_distance);
  read(j, "num_collaborators", cfg.num_collaborators);
  read(j, "rng_seed", cfg.rng_seed);
  read_enum(j, "bs_link_condition", cfg.bs_link_condition, parse_link_condition);
  read_enum(j, "ue_link_condition", cfg.ue_link_condition, parse_link_condition);
  read(j, "shadowing", cfg.shadowing);
  return cfg;
}

json scenario_json(const ScenarioConfig& cfg) {
  return {
      {"carrier_frequency", cfg.carrier_frequency},
      {"bandwidth_phase1", cfg.bandwidth_phase1},
      {"bandwidth_phase2", cfg.bandwidth_phase2},
      {"bs_height", cfg.bs_height},
      {"ue_height", cfg.ue_height},
      {"avg_building_height", cfg.avg_building_height},
      {"bs_rx_antennas", cfg.bs_rx_antennas},
      {"ue_tx_antennas", cfg.ue_tx_antennas},
      {"ue_rx_antennas", cfg.ue_rx_antennas},
      {"phase1_tx_power", cfg.phase1_tx_power},
      {"phase2_tx_power_per_ue", cfg.phase2_tx_power_per_ue},
      {"power_mode", std::string(to_string(cfg.power_mode))},
      {"noise_figure_bs", cfg.noise_figure_bs},
      {"noise_figure_ue", cfg.noise_figure_ue},
      {"mdaa_radius", cfg.mdaa_radius},
      {"bs_distance", cfg.bs_distance},
      {"num_collaborators", cfg.num_collaborators},
      {"rng_seed", cfg.rng_seed},
      {"bs_link_condition", std::string(to_string(cfg.bs_link_condition))},
      {"ue_link_condition", std::string(to_string(cfg.ue_link_condition))},
      {"shadowing", cfg.shadowing},
  };
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& json_text) {
  return scenario_from(parse_text(json_text));
}

ExperimentSpec parse_experiment_spec(const std::string& json_text) {
  const json j = parse_text(json_text);
  static const std::set<std::string> known = {
      "scenario", "sweep_variable", "sweep_values", "trials", "schemes", "selection_methods",
      "phase1_maxmin", "maxmin_solver", "selection_objective", "threads"};
  reject_unknown(j, known, "experiment");

  ExperimentSpec spec;
  if (j.contains("scenario")) spec.scenario = scenario_from(j.at("scenario"));
  read_enum(j, "sweep_variable", spec.sweep_variable, parse_sweep_variable);
  read(j, "sweep_values", spec.sweep_values);
  read(j, "trials", spec.trials);
  if (j.contains("schemes")) {
    for (const auto& s : j.at("schemes")) spec.schemes.push_back(parse_scheme(s.get<std::string>()));
  }
  if (j.contains("selection_methods")) {
    for (const auto& s : j.at("selection_methods")) {
      spec.selection_methods.push_back(parse_selection_method(s.get<std::string>()));
    }
  }
  read(j, "phase1_maxmin", spec.phase1_maxmin);
  if (j.contains("maxmin_solver")) {
    const json& m = j.at("maxmin_solver");
    reject_unknown(m, {"max_iterations", "step_scale", "stall_window", "stall_tolerance"},
                   "maxmin_solver");
    read(m, "max_iterations", spec.maxmin_solver.max_iterations);
    read(m, "step_scale", spec.maxmin_solver.step_scale);
    read(m, "stall_window", spec.maxmin_solver.stall_window);
    read(m, "stall_tolerance", spec.maxmin_solver.stall_tolerance);
  }
  read_enum(j, "selection_objective", spec.selection_objective, parse_selection_objective);
  read(j, "threads", spec.threads);
  return spec;
}

std::string scenario_to_json(const ScenarioConfig& cfg) { return scenario_json(cfg).dump(2); }

std::string experiment_spec_to_json(const ExperimentSpec& spec) {
  json schemes = json::array();
  for (Scheme s : spec.schemes) schemes.push_back(std::string(to_string(s)));
  json methods = json::array();
  for (SelectionMethod m : spec.selection_methods) methods.push_back(std::string(to_string(m)));
  const json j = {
      {"scenario", scenario_json(spec.scenario)},
      {"sweep_variable", std::string(to_string(spec.sweep_variable))},
      {"sweep_values", spec.sweep_values},
      {"trials", spec.trials},
      {"schemes", schemes},
      {"selection_methods", methods},
      {"phase1_maxmin", spec.phase1_maxmin},
      {"maxmin_solver",
       {{"max_iterations", spec.maxmin_solver.max_iterations},
        {"step_scale", spec.maxmin_solver.step_scale},
        {"stall_window", spec.maxmin_solver.stall_window},
        {"stall_tolerance", spec.maxmin_solver.stall_tolerance}}},
      {"selection_objective", std::string(to_string(spec.selection_objective))},
      {"threads", spec.threads},
  };
  return j.dump(2);
}

ExperimentSpec load_experiment_spec(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open spec file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  try {
    ExperimentSpec spec = parse_experiment_spec(buffer.str());
    spec.validate();
    return spec;
  } catch (const std::exception& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

}  // namespace mdaa
