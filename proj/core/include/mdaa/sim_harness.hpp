#pragma once

// Monte Carlo driver: per-trial draws, scheme evaluation, aggregation, figure
// presets and CSV output.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mdaa/mimo_core.hpp"
#include "mdaa/phase_capacity.hpp"
#include "mdaa/rf_env.hpp"
#include "mdaa/selection.hpp"

namespace mdaa {

enum class SweepVariable { BsDistance, NumUes, MdaaRadius };

enum class Scheme { Phase1Only, Phase2CJT, Phase2NCJT, DmimoCJT, DmimoNCJT, Baseline };

struct ExperimentSpec {
  ScenarioConfig scenario;
  SweepVariable sweep_variable = SweepVariable::BsDistance;
  std::vector<double> sweep_values;
  int trials = 500;
  std::vector<Scheme> schemes;
  std::vector<SelectionMethod> selection_methods;
  // Adds the max-min precoder series to Phase1Only.
  bool phase1_maxmin = false;
  MaxMinSolverConfig maxmin_solver;
  SelectionObjective selection_objective = SelectionObjective::Harmonic;
  // Worker threads over trials; 0 picks the hardware concurrency. Results do
  // not depend on this value.
  unsigned threads = 1;
  // Appended to every scheme label of this run, e.g. "/U=3".
  std::string label_suffix;

  /// Throws std::invalid_argument before any trial runs.
  void validate() const;
};

struct CapacityReport {
  SweepVariable sweep_variable = SweepVariable::BsDistance;
  double sweep_value = 0.0;
  std::string scheme;
  PowerMode power_mode = PowerMode::FullPower;
  double mean_rate = 0.0;  // bits/s/Hz
  double mean_bits = 0.0;  // bits per second
  double relative_improvement = 0.0;
  double mean_selected_ues = 0.0;
  int trials = 0;
  double confidence_halfwidth = 0.0;  // 95 %, bits/s
};

/// Everything random in one trial. Index 0 of the phase-2 vectors is the
/// serving UE; index i + 1 is collaborator i.
struct TrialRealization {
  Placement placement;
  std::vector<LinkBudget> phase1_budgets;
  std::vector<FadingRealization> phase1_channels;
  std::vector<double> phase2_pathloss_db;
  std::vector<FadingRealization> phase2_channels;
};

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t sweep_index,
                         std::size_t trial_index);

/// Independent random streams per draw category; every stream is consumed in
/// collaborator order, so a trial with fewer collaborators sees a prefix of
/// the same draws.
TrialRealization draw_trial(const ScenarioConfig& cfg, std::uint64_t seed);

/// Phase-2 budgets for the serving UE plus `collaborators`, with per-UE power
/// set by the scenario's power mode for that transmit-set size.
std::vector<LinkBudget> phase2_budgets(const TrialRealization& trial, const ScenarioConfig& cfg,
                                       std::span<const std::size_t> collaborators);

std::vector<FadingRealization> phase2_channels(const TrialRealization& trial,
                                               std::span<const std::size_t> collaborators);

/// Selection problem for one trial with the given Phase-2 scheme.
SelectionProblem make_selection_problem(const TrialRealization& trial, const ScenarioConfig& cfg,
                                        Phase2Scheme scheme, SelectionObjective objective);

/// Scenario at one sweep point.
ScenarioConfig apply_sweep(const ScenarioConfig& base, SweepVariable variable, double value);

std::vector<CapacityReport> run_experiment(const ExperimentSpec& spec);

enum class FigureId { Fig3, Fig4, Fig5, Fig6, Fig7, Fig8, Fig9 };

struct FigureOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<PowerMode> power_mode;
  std::optional<LinkCondition> bs_link_condition;
  std::optional<std::vector<double>> sweep_values;
  std::optional<unsigned> threads;
};

/// Preset experiment(s) for a figure; some figures combine several runs.
std::vector<ExperimentSpec> figure_specs(FigureId figure, const FigureOverrides& overrides);

std::vector<CapacityReport> reproduce_figure(FigureId figure, const FigureOverrides& overrides);

void write_csv(const std::vector<CapacityReport>& reports, std::ostream& out);

/// Throws std::runtime_error naming the path when the file cannot be written.
void emit_csv(const std::vector<CapacityReport>& reports, const std::filesystem::path& path);

double pairwise_sum(std::span<const double> values);

std::string_view to_string(SweepVariable v);
std::string_view to_string(Scheme s);
std::string_view to_string(PowerMode m);
std::string_view to_string(LinkCondition c);
std::string_view to_string(SelectionMethod m);
std::string_view to_string(SelectionObjective o);
std::string_view to_string(FigureId f);

SweepVariable parse_sweep_variable(std::string_view text);
Scheme parse_scheme(std::string_view text);
PowerMode parse_power_mode(std::string_view text);
LinkCondition parse_link_condition(std::string_view text);
SelectionMethod parse_selection_method(std::string_view text);
SelectionObjective parse_selection_objective(std::string_view text);
FigureId parse_figure_id(std::string_view text);

}  // namespace mdaa
