#include "mdaa/sim_harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace mdaa {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

enum Stream : std::uint64_t { kPlacement = 1, kPhase1Fading, kPhase2Fading, kCondition, kShadowing };

Rng stream_rng(std::uint64_t seed, Stream stream) {
  return Rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(stream))));
}

double shadowing_db(const ScenarioConfig& cfg, bool los, Rng& rng) {
  if (!cfg.shadowing) return 0.0;
  std::normal_distribution<double> normal(0.0, shadowing_std_db(los));
  return normal(rng);
}

bool has_scheme(const ExperimentSpec& spec, Scheme s) {
  return std::find(spec.schemes.begin(), spec.schemes.end(), s) != spec.schemes.end();
}

bool is_dmimo(Scheme s) { return s == Scheme::DmimoCJT || s == Scheme::DmimoNCJT; }

struct Sample {
  double rate = 0.0;
  double bits = 0.0;
  double selected = 0.0;
};

struct TrialOutcome {
  double baseline_bits = 0.0;
  std::vector<Sample> samples;  // one per series label, in label order
};

std::vector<std::string> series_labels(const ExperimentSpec& spec) {
  std::vector<std::string> labels;
  for (Scheme s : spec.schemes) {
    const std::string name(to_string(s));
    if (s == Scheme::Phase1Only) {
      for (const char* stat : {"/min", "/median", "/max"}) labels.push_back(name + stat);
      if (spec.phase1_maxmin) labels.push_back(name + "/maxmin");
    } else if (is_dmimo(s)) {
      for (SelectionMethod m : spec.selection_methods) {
        labels.push_back(name + "/" + std::string(to_string(m)));
      }
    } else {
      labels.push_back(name);
    }
  }
  for (auto& label : labels) label += spec.label_suffix;
  return labels;
}

TrialOutcome run_trial(const ExperimentSpec& spec, const ScenarioConfig& cfg,
                       std::size_t sweep_index, std::size_t trial_index) {
  const TrialRealization trial = draw_trial(cfg, trial_seed(cfg.rng_seed, sweep_index, trial_index));
  const double b2 = cfg.bandwidth_phase2;
  const double b1 = cfg.bandwidth_phase1;
  const auto n_collab = static_cast<double>(cfg.num_collaborators);

  std::vector<std::size_t> everyone(static_cast<std::size_t>(cfg.num_collaborators));
  for (std::size_t i = 0; i < everyone.size(); ++i) everyone[i] = i;

  TrialOutcome outcome;
  const auto serving_budget = phase2_budgets(trial, cfg, {});
  const double baseline = baseline_rate(serving_budget.front(), trial.phase2_channels.front());
  outcome.baseline_bits = b2 * baseline;

  for (Scheme s : spec.schemes) {
    switch (s) {
      case Scheme::Baseline:
        outcome.samples.push_back({baseline, b2 * baseline, 0.0});
        break;
      case Scheme::Phase1Only: {
        const Phase1Report r = phase1_rate_identity(trial.phase1_budgets, trial.phase1_channels);
        for (double rate : {r.min_rate, r.median_rate, r.max_rate}) {
          outcome.samples.push_back({rate, b1 * rate, n_collab});
        }
        if (spec.phase1_maxmin) {
          const MaxMinResult m =
              phase1_maxmin_precoder(trial.phase1_budgets, trial.phase1_channels, spec.maxmin_solver);
          outcome.samples.push_back({m.report.min_rate, b1 * m.report.min_rate, n_collab});
        }
        break;
      }
      case Scheme::Phase2CJT:
      case Scheme::Phase2NCJT: {
        const auto budgets = phase2_budgets(trial, cfg, everyone);
        const auto channels = phase2_channels(trial, everyone);
        const double rate = s == Scheme::Phase2CJT
                                ? phase2_cjt(budgets, channels).rate
                                : phase2_ncjt(budgets, channels, equal_cluster_split(budgets.size())).rate;
        outcome.samples.push_back({rate, b2 * rate, n_collab});
        break;
      }
      case Scheme::DmimoCJT:
      case Scheme::DmimoNCJT: {
        const Phase2Scheme phase2 = s == Scheme::DmimoCJT ? Phase2Scheme::CJT : Phase2Scheme::NCJT;
        const SelectionProblem problem =
            make_selection_problem(trial, cfg, phase2, spec.selection_objective);
        for (SelectionMethod m : spec.selection_methods) {
          const SelectionResult r = run_selection(m, problem);
          const double bits = r.throughput.bits_delivered;
          outcome.samples.push_back({bits / b2, bits, static_cast<double>(r.chosen_set.size())});
        }
        break;
      }
    }
  }
  return outcome;
}

std::vector<TrialOutcome> run_point(const ExperimentSpec& spec, const ScenarioConfig& cfg,
                                    std::size_t sweep_index) {
  const auto trials = static_cast<std::size_t>(spec.trials);
  std::vector<TrialOutcome> outcomes(trials);
  unsigned workers = spec.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                       : spec.threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, trials));
  if (workers <= 1) {
    for (std::size_t t = 0; t < trials; ++t) outcomes[t] = run_trial(spec, cfg, sweep_index, t);
    return outcomes;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t t = next++; t < trials && !failed; t = next++) {
        try {
          outcomes[t] = run_trial(spec, cfg, sweep_index, t);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return outcomes;
}

struct Moments {
  double mean = 0.0;
  double halfwidth = 0.0;
};

Moments moments(std::span<const double> values) {
  Moments m;
  const auto n = static_cast<double>(values.size());
  if (values.empty()) return m;
  m.mean = pairwise_sum(values) / n;
  if (values.size() > 1) {
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) sq[i] = (values[i] - m.mean) * (values[i] - m.mean);
    const double variance = pairwise_sum(sq) / (n - 1.0);
    m.halfwidth = 1.959963984540054 * std::sqrt(variance / n);
  }
  return m;
}

std::vector<double> default_distance_sweep() {
  std::vector<double> v;
  for (int d = 100; d <= 1000; d += 100) v.push_back(d);
  return v;
}

std::vector<double> default_radius_sweep() {
  std::vector<double> v;
  for (int r = 10; r <= 200; r += 10) v.push_back(r);
  return v;
}

template <typename Enum, std::size_t N>
Enum parse_enum(std::string_view text, const Enum (&values)[N], const char* what) {
  for (Enum v : values) {
    if (to_string(v) == text) return v;
  }
  throw std::invalid_argument(std::string("unknown ") + what + " '" + std::string(text) + "'");
}

void append_number(std::string& out, double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  out.append(buf, end);
}

}  // namespace

void ExperimentSpec::validate() const {
  scenario.validate();
  if (trials < 1) throw std::invalid_argument("experiment: trials must be >= 1");
  if (sweep_values.empty()) throw std::invalid_argument("experiment: sweep_values is empty");
  if (!std::is_sorted(sweep_values.begin(), sweep_values.end())) {
    throw std::invalid_argument("experiment: sweep_values must be sorted ascending");
  }
  if (schemes.empty()) throw std::invalid_argument("experiment: no schemes requested");
  const bool dmimo = std::any_of(schemes.begin(), schemes.end(), is_dmimo);
  if (dmimo && selection_methods.empty()) {
    throw std::invalid_argument("experiment: D-MIMO schemes need at least one selection method");
  }
  for (double value : sweep_values) {
    const ScenarioConfig cfg = apply_sweep(scenario, sweep_variable, value);
    cfg.validate();
    if (has_scheme(*this, Scheme::Phase1Only) && cfg.num_collaborators < 1) {
      throw std::invalid_argument("experiment: Phase1Only needs at least one collaborator");
    }
    const bool ncjt = has_scheme(*this, Scheme::Phase2NCJT) || has_scheme(*this, Scheme::DmimoNCJT);
    if (ncjt && cfg.num_collaborators >= 1 && cfg.bs_rx_antennas < 2 * cfg.ue_tx_antennas) {
      throw std::invalid_argument("experiment: NCJT needs bs_rx_antennas >= 2 * ue_tx_antennas");
    }
    const bool exhaustive = std::find(selection_methods.begin(), selection_methods.end(),
                                      SelectionMethod::Exhaustive) != selection_methods.end();
    if (dmimo && exhaustive &&
        static_cast<std::size_t>(cfg.num_collaborators) > kMaxExhaustiveCollaborators) {
      throw std::invalid_argument("experiment: too many collaborators for exhaustive search");
    }
  }
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t sweep_index,
                         std::size_t trial_index) {
  std::uint64_t s = splitmix64(master_seed);
  s = splitmix64(s ^ (static_cast<std::uint64_t>(sweep_index) * 0xd1b54a32d192ed03ULL));
  s = splitmix64(s ^ (static_cast<std::uint64_t>(trial_index) * 0xabc98388fb8fac03ULL));
  return s;
}

TrialRealization draw_trial(const ScenarioConfig& cfg, std::uint64_t seed) {
  Rng placement_rng = stream_rng(seed, kPlacement);
  Rng phase1_rng = stream_rng(seed, kPhase1Fading);
  Rng phase2_rng = stream_rng(seed, kPhase2Fading);
  Rng condition_rng = stream_rng(seed, kCondition);
  Rng shadow_rng = stream_rng(seed, kShadowing);

  TrialRealization trial;
  trial.placement = place_mdaa(cfg, placement_rng);
  const Point2 serving = trial.placement.serving_ue_position;
  const Point2 bs = trial.placement.bs_position;
  const double dh = cfg.bs_height - cfg.ue_height;

  auto add_bs_link = [&](Point2 ue) {
    const double d2 = distance(ue, bs);
    const double d3 = std::max(kMinLinkDistance, std::hypot(d2, dh));
    const bool los = draw_link_condition(cfg.bs_link_condition, d2, condition_rng);
    const double pl = pathloss_db(d3, d2, cfg.bs_height, cfg.ue_height, cfg, los) +
                      shadowing_db(cfg, los, shadow_rng);
    trial.phase2_pathloss_db.push_back(pl);
    trial.phase2_channels.push_back(draw_channel(cfg.bs_rx_antennas, cfg.ue_tx_antennas, phase2_rng));
  };

  add_bs_link(serving);
  for (const Point2& ue : trial.placement.collaborator_positions) {
    const double d = std::max(kMinLinkDistance, distance(ue, serving));
    const bool los = draw_link_condition(cfg.ue_link_condition, d, condition_rng);
    const double pl = pathloss_db(d, d, cfg.ue_height, cfg.ue_height, cfg, los) +
                      shadowing_db(cfg, los, shadow_rng);
    trial.phase1_budgets.push_back(make_link_budget(cfg.phase1_tx_power, pl, cfg.bandwidth_phase1,
                                                    cfg.noise_figure_ue, cfg.ue_tx_antennas));
    trial.phase1_channels.push_back(draw_channel(cfg.ue_rx_antennas, cfg.ue_tx_antennas, phase1_rng));
    add_bs_link(ue);
  }
  return trial;
}

std::vector<LinkBudget> phase2_budgets(const TrialRealization& trial, const ScenarioConfig& cfg,
                                       std::span<const std::size_t> collaborators) {
  const int num_ues = 1 + static_cast<int>(collaborators.size());
  const double power_dbm = normalize_power(cfg.phase2_tx_power_per_ue, num_ues, cfg.power_mode);
  std::vector<LinkBudget> budgets;
  budgets.reserve(static_cast<std::size_t>(num_ues));
  auto add = [&](std::size_t ue) {
    budgets.push_back(make_link_budget(power_dbm, trial.phase2_pathloss_db.at(ue),
                                       cfg.bandwidth_phase2, cfg.noise_figure_bs,
                                       cfg.ue_tx_antennas));
  };
  add(0);
  for (std::size_t c : collaborators) add(c + 1);
  return budgets;
}

std::vector<FadingRealization> phase2_channels(const TrialRealization& trial,
                                               std::span<const std::size_t> collaborators) {
  std::vector<FadingRealization> channels;
  channels.reserve(collaborators.size() + 1);
  channels.push_back(trial.phase2_channels.at(0));
  for (std::size_t c : collaborators) channels.push_back(trial.phase2_channels.at(c + 1));
  return channels;
}

SelectionProblem make_selection_problem(const TrialRealization& trial, const ScenarioConfig& cfg,
                                        Phase2Scheme scheme, SelectionObjective objective) {
  SelectionProblem problem;
  problem.bandwidth_phase1 = cfg.bandwidth_phase1;
  problem.bandwidth_phase2 = cfg.bandwidth_phase2;
  problem.objective = objective;
  if (!trial.phase1_channels.empty()) {
    problem.phase1_rates = phase1_rate_identity(trial.phase1_budgets, trial.phase1_channels).per_ue_rates;
  }
  // The evaluator refers to `trial`, which must outlive the problem.
  problem.phase2 = [&trial, cfg, scheme](std::span<const std::size_t> subset) {
    const auto budgets = phase2_budgets(trial, cfg, subset);
    const auto channels = phase2_channels(trial, subset);
    if (scheme == Phase2Scheme::CJT) return phase2_cjt(budgets, channels).rate;
    return phase2_ncjt(budgets, channels, equal_cluster_split(budgets.size())).rate;
  };
  problem.baseline_phase2_rate = problem.phase2({});
  return problem;
}

ScenarioConfig apply_sweep(const ScenarioConfig& base, SweepVariable variable, double value) {
  ScenarioConfig cfg = base;
  switch (variable) {
    case SweepVariable::BsDistance:
      cfg.bs_distance = value;
      break;
    case SweepVariable::MdaaRadius:
      cfg.mdaa_radius = value;
      break;
    case SweepVariable::NumUes:
      if (!(value >= 1.0) || std::floor(value) != value) {
        throw std::invalid_argument("NumUes sweep values must be integers >= 1");
      }
      cfg.num_collaborators = static_cast<int>(value) - 1;
      break;
  }
  return cfg;
}

std::vector<CapacityReport> run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  const std::vector<std::string> labels = series_labels(spec);
  std::vector<CapacityReport> reports;

  for (std::size_t p = 0; p < spec.sweep_values.size(); ++p) {
    const ScenarioConfig cfg = apply_sweep(spec.scenario, spec.sweep_variable, spec.sweep_values[p]);
    const std::vector<TrialOutcome> outcomes = run_point(spec, cfg, p);

    std::vector<double> baseline(outcomes.size());
    for (std::size_t t = 0; t < outcomes.size(); ++t) baseline[t] = outcomes[t].baseline_bits;
    const double mean_baseline = moments(baseline).mean;

    for (std::size_t s = 0; s < labels.size(); ++s) {
      std::vector<double> rates(outcomes.size()), bits(outcomes.size()), selected(outcomes.size());
      for (std::size_t t = 0; t < outcomes.size(); ++t) {
        rates[t] = outcomes[t].samples[s].rate;
        bits[t] = outcomes[t].samples[s].bits;
        selected[t] = outcomes[t].samples[s].selected;
      }
      const Moments bit_moments = moments(bits);
      CapacityReport r;
      r.sweep_variable = spec.sweep_variable;
      r.sweep_value = spec.sweep_values[p];
      r.scheme = labels[s];
      r.power_mode = cfg.power_mode;
      r.mean_rate = moments(rates).mean;
      r.mean_bits = bit_moments.mean;
      r.relative_improvement = mean_baseline > 0.0 ? bit_moments.mean / mean_baseline : 0.0;
      r.mean_selected_ues = moments(selected).mean;
      r.trials = spec.trials;
      r.confidence_halfwidth = bit_moments.halfwidth;
      reports.push_back(std::move(r));
    }
  }
  return reports;
}

std::vector<ExperimentSpec> figure_specs(FigureId figure, const FigureOverrides& overrides) {
  ExperimentSpec base;
  base.scenario.rng_seed = overrides.seed.value_or(1);
  base.trials = overrides.trials.value_or(500);
  base.threads = overrides.threads.value_or(1);
  if (overrides.bs_link_condition) base.scenario.bs_link_condition = *overrides.bs_link_condition;
  base.sweep_variable = SweepVariable::BsDistance;
  base.sweep_values = default_distance_sweep();
  base.scenario.num_collaborators = 10;
  base.scenario.mdaa_radius = 50.0;

  auto with_mode = [&](ExperimentSpec spec, PowerMode preset) {
    spec.scenario.power_mode = overrides.power_mode.value_or(preset);
    if (overrides.sweep_values) spec.sweep_values = *overrides.sweep_values;
    return spec;
  };

  std::vector<ExperimentSpec> specs;
  switch (figure) {
    case FigureId::Fig3: {
      ExperimentSpec spec = base;
      spec.sweep_variable = SweepVariable::MdaaRadius;
      spec.sweep_values = default_radius_sweep();
      spec.schemes = {Scheme::Phase1Only};
      spec.phase1_maxmin = true;
      specs.push_back(with_mode(spec, PowerMode::FullPower));
      break;
    }
    case FigureId::Fig4:
    case FigureId::Fig5: {
      const PowerMode mode = figure == FigureId::Fig4 ? PowerMode::FullPower : PowerMode::Normalized;
      for (int u = 1; u <= 10; ++u) {
        ExperimentSpec spec = base;
        spec.scenario.num_collaborators = u - 1;
        spec.schemes = u == 1 ? std::vector{Scheme::Baseline, Scheme::Phase2CJT}
                              : std::vector{Scheme::Phase2CJT};
        spec.label_suffix = "/U=" + std::to_string(u);
        specs.push_back(with_mode(spec, mode));
      }
      break;
    }
    case FigureId::Fig6:
    case FigureId::Fig7: {
      ExperimentSpec spec = base;
      spec.schemes = {Scheme::Baseline, Scheme::DmimoCJT};
      spec.selection_methods = {SelectionMethod::Exhaustive};
      specs.push_back(
          with_mode(spec, figure == FigureId::Fig6 ? PowerMode::FullPower : PowerMode::Normalized));
      break;
    }
    case FigureId::Fig8: {
      ExperimentSpec spec = base;
      spec.scenario.mdaa_radius = 200.0;
      spec.schemes = {Scheme::Baseline, Scheme::DmimoCJT};
      spec.selection_methods = {SelectionMethod::Greedy, SelectionMethod::All,
                                SelectionMethod::Exhaustive};
      specs.push_back(with_mode(spec, PowerMode::FullPower));
      break;
    }
    case FigureId::Fig9: {
      ExperimentSpec spec = base;
      spec.schemes = {Scheme::Baseline, Scheme::DmimoNCJT};
      spec.selection_methods = {SelectionMethod::Exhaustive};
      if (overrides.power_mode) {
        specs.push_back(with_mode(spec, *overrides.power_mode));
      } else {
        specs.push_back(with_mode(spec, PowerMode::FullPower));
        specs.push_back(with_mode(spec, PowerMode::Normalized));
      }
      break;
    }
  }
  return specs;
}

std::vector<CapacityReport> reproduce_figure(FigureId figure, const FigureOverrides& overrides) {
  const std::vector<ExperimentSpec> specs = figure_specs(figure, overrides);
  for (const auto& spec : specs) spec.validate();
  std::vector<CapacityReport> all;
  for (const auto& spec : specs) {
    auto reports = run_experiment(spec);
    all.insert(all.end(), reports.begin(), reports.end());
  }
  return all;
}

void write_csv(const std::vector<CapacityReport>& reports, std::ostream& out) {
  out << "sweep_variable,sweep_value,scheme,power_mode,mean_rate_bps_hz,mean_bits_per_s,"
         "relative_improvement,mean_selected_ues,trials,ci95_halfwidth\n";
  std::string line;
  for (const auto& r : reports) {
    line.clear();
    line += to_string(r.sweep_variable);
    line += ',';
    append_number(line, r.sweep_value);
    line += ',';
    line += r.scheme;
    line += ',';
    line += to_string(r.power_mode);
    for (double v : {r.mean_rate, r.mean_bits, r.relative_improvement, r.mean_selected_ues}) {
      line += ',';
      append_number(line, v);
    }
    line += ',';
    line += std::to_string(r.trials);
    line += ',';
    append_number(line, r.confidence_halfwidth);
    line += '\n';
    out << line;
  }
}

void emit_csv(const std::vector<CapacityReport>& reports, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_csv(reports, file);
  file.flush();
  if (!file) throw std::runtime_error("failed writing '" + path.string() + "'");
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

std::string_view to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::BsDistance: return "BsDistance";
    case SweepVariable::NumUes: return "NumUes";
    case SweepVariable::MdaaRadius: return "MdaaRadius";
  }
  return "?";
}

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::Phase1Only: return "Phase1Only";
    case Scheme::Phase2CJT: return "Phase2CJT";
    case Scheme::Phase2NCJT: return "Phase2NCJT";
    case Scheme::DmimoCJT: return "DmimoCJT";
    case Scheme::DmimoNCJT: return "DmimoNCJT";
    case Scheme::Baseline: return "Baseline";
  }
  return "?";
}

std::string_view to_string(PowerMode m) {
  return m == PowerMode::FullPower ? "FullPower" : "Normalized";
}

std::string_view to_string(LinkCondition c) {
  switch (c) {
    case LinkCondition::LOS: return "LOS";
    case LinkCondition::NLOS: return "NLOS";
    case LinkCondition::ProbabilisticLOS: return "ProbabilisticLOS";
  }
  return "?";
}

std::string_view to_string(SelectionMethod m) {
  switch (m) {
    case SelectionMethod::Exhaustive: return "Exhaustive";
    case SelectionMethod::Greedy: return "Greedy";
    case SelectionMethod::All: return "All";
  }
  return "?";
}

std::string_view to_string(SelectionObjective o) {
  return o == SelectionObjective::Harmonic ? "Harmonic" : "MinRate";
}

std::string_view to_string(FigureId f) {
  switch (f) {
    case FigureId::Fig3: return "fig3";
    case FigureId::Fig4: return "fig4";
    case FigureId::Fig5: return "fig5";
    case FigureId::Fig6: return "fig6";
    case FigureId::Fig7: return "fig7";
    case FigureId::Fig8: return "fig8";
    case FigureId::Fig9: return "fig9";
  }
  return "?";
}

SweepVariable parse_sweep_variable(std::string_view text) {
  constexpr SweepVariable all[] = {SweepVariable::BsDistance, SweepVariable::NumUes,
                                   SweepVariable::MdaaRadius};
  return parse_enum(text, all, "sweep variable");
}

Scheme parse_scheme(std::string_view text) {
  constexpr Scheme all[] = {Scheme::Phase1Only, Scheme::Phase2CJT, Scheme::Phase2NCJT,
                            Scheme::DmimoCJT,   Scheme::DmimoNCJT, Scheme::Baseline};
  return parse_enum(text, all, "scheme");
}

PowerMode parse_power_mode(std::string_view text) {
  if (text == "full") return PowerMode::FullPower;
  if (text == "normalized") return PowerMode::Normalized;
  constexpr PowerMode all[] = {PowerMode::FullPower, PowerMode::Normalized};
  return parse_enum(text, all, "power mode");
}

LinkCondition parse_link_condition(std::string_view text) {
  if (text == "los") return LinkCondition::LOS;
  if (text == "nlos") return LinkCondition::NLOS;
  if (text == "prob") return LinkCondition::ProbabilisticLOS;
  constexpr LinkCondition all[] = {LinkCondition::LOS, LinkCondition::NLOS,
                                   LinkCondition::ProbabilisticLOS};
  return parse_enum(text, all, "link condition");
}

SelectionMethod parse_selection_method(std::string_view text) {
  constexpr SelectionMethod all[] = {SelectionMethod::Exhaustive, SelectionMethod::Greedy,
                                     SelectionMethod::All};
  return parse_enum(text, all, "selection method");
}

SelectionObjective parse_selection_objective(std::string_view text) {
  constexpr SelectionObjective all[] = {SelectionObjective::Harmonic, SelectionObjective::MinRate};
  return parse_enum(text, all, "selection objective");
}

FigureId parse_figure_id(std::string_view text) {
  constexpr FigureId all[] = {FigureId::Fig3, FigureId::Fig4, FigureId::Fig5, FigureId::Fig6,
                              FigureId::Fig7, FigureId::Fig8, FigureId::Fig9};
  return parse_enum(text, all, "figure id");
}

}  // namespace mdaa
