#pragma once

// JSON scenario/experiment files. Keys are the ScenarioConfig and
// ExperimentSpec field names; powers in dBm, distances in m, frequencies and
// bandwidths in Hz. Absent keys keep their defaults, unknown keys are errors.

#include <filesystem>
#include <string>

#include "mdaa/rf_env.hpp"
#include "mdaa/sim_harness.hpp"

namespace mdaa {

ScenarioConfig parse_scenario(const std::string& json_text);
ExperimentSpec parse_experiment_spec(const std::string& json_text);

std::string scenario_to_json(const ScenarioConfig& cfg);
std::string experiment_spec_to_json(const ExperimentSpec& spec);

/// Reads and validates an experiment file; errors carry the path.
ExperimentSpec load_experiment_spec(const std::filesystem::path& path);

}  // namespace mdaa
