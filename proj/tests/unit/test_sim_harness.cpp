#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "mdaa/sim_harness.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

mdaa::ExperimentSpec small_spec() {
  mdaa::ExperimentSpec spec;
  spec.scenario.num_collaborators = 3;
  spec.scenario.rng_seed = 99;
  spec.sweep_values = {200.0, 600.0};
  spec.trials = 8;
  spec.schemes = {mdaa::Scheme::Baseline, mdaa::Scheme::Phase1Only, mdaa::Scheme::Phase2CJT,
                  mdaa::Scheme::Phase2NCJT, mdaa::Scheme::DmimoCJT, mdaa::Scheme::DmimoNCJT};
  spec.selection_methods = {mdaa::SelectionMethod::Exhaustive, mdaa::SelectionMethod::Greedy,
                            mdaa::SelectionMethod::All};
  return spec;
}

std::string csv_of(const std::vector<mdaa::CapacityReport>& reports) {
  std::ostringstream out;
  mdaa::write_csv(reports, out);
  return out.str();
}

const mdaa::CapacityReport& find(const std::vector<mdaa::CapacityReport>& reports,
                                 const std::string& scheme, double x) {
  const auto it = std::find_if(reports.begin(), reports.end(), [&](const auto& r) {
    return r.scheme == scheme && r.sweep_value == x;
  });
  REQUIRE(it != reports.end());
  return *it;
}

}  // namespace

TEST_CASE("trial_seed separates sweep points and trials") {
  std::set<std::uint64_t> seen;
  for (std::size_t p = 0; p < 20; ++p) {
    for (std::size_t t = 0; t < 500; ++t) seen.insert(mdaa::trial_seed(42, p, t));
  }
  CHECK(seen.size() == 20 * 500);
  CHECK(mdaa::trial_seed(1, 0, 0) != mdaa::trial_seed(2, 0, 0));
  CHECK(mdaa::trial_seed(1, 3, 4) == mdaa::trial_seed(1, 3, 4));
}

TEST_CASE("draw_trial gives a prefix of the same draws for fewer collaborators") {
  mdaa::ScenarioConfig big;
  big.num_collaborators = 9;
  mdaa::ScenarioConfig small = big;
  small.num_collaborators = 4;
  const auto a = mdaa::draw_trial(big, 123);
  const auto b = mdaa::draw_trial(small, 123);
  REQUIRE(b.phase2_channels.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(a.phase2_channels[i].entries == b.phase2_channels[i].entries);
    CHECK(a.phase2_pathloss_db[i] == b.phase2_pathloss_db[i]);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(a.phase1_channels[i].entries == b.phase1_channels[i].entries);
    CHECK(a.placement.collaborator_positions[i] == b.placement.collaborator_positions[i]);
  }
}

TEST_CASE("phase2_budgets honour the power mode for the transmit-set size") {
  mdaa::ScenarioConfig cfg;
  cfg.num_collaborators = 4;
  const auto trial = mdaa::draw_trial(cfg, 5);
  const std::vector<std::size_t> three{0, 2, 3};
  cfg.power_mode = mdaa::PowerMode::FullPower;
  const auto full = mdaa::phase2_budgets(trial, cfg, three);
  cfg.power_mode = mdaa::PowerMode::Normalized;
  const auto norm = mdaa::phase2_budgets(trial, cfg, three);
  REQUIRE(full.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK_THAT(full[i].tx_power, WithinRel(mdaa::dbm_to_watt(23.0), 1e-12));
    CHECK_THAT(norm[i].tx_power, WithinRel(mdaa::dbm_to_watt(23.0) / 4.0, 1e-12));
    CHECK_THAT(full[i].snr_scale, WithinRel(4.0 * norm[i].snr_scale, 1e-12));
  }
  CHECK_THAT(10.0 * std::log10(full[1].pathloss_gain), WithinAbs(-trial.phase2_pathloss_db[1], 1e-9));
  CHECK_THAT(10.0 * std::log10(full[2].pathloss_gain), WithinAbs(-trial.phase2_pathloss_db[3], 1e-9));
}

TEST_CASE("One-trial experiment equals the direct composition") {
  mdaa::ExperimentSpec spec;
  spec.scenario.num_collaborators = 3;
  spec.scenario.rng_seed = 11;
  spec.sweep_values = {300.0};
  spec.trials = 1;
  spec.schemes = {mdaa::Scheme::Baseline, mdaa::Scheme::Phase2CJT, mdaa::Scheme::DmimoCJT};
  spec.selection_methods = {mdaa::SelectionMethod::Exhaustive};
  const auto reports = mdaa::run_experiment(spec);
  REQUIRE(reports.size() == 3);

  const mdaa::ScenarioConfig cfg = mdaa::apply_sweep(spec.scenario, spec.sweep_variable, 300.0);
  const auto trial = mdaa::draw_trial(cfg, mdaa::trial_seed(11, 0, 0));
  const std::vector<std::size_t> all{0, 1, 2};
  const double baseline = mdaa::baseline_rate(mdaa::phase2_budgets(trial, cfg, {}).front(),
                                              trial.phase2_channels.front());
  const double cjt =
      mdaa::phase2_cjt(mdaa::phase2_budgets(trial, cfg, all), mdaa::phase2_channels(trial, all)).rate;
  const auto problem =
      mdaa::make_selection_problem(trial, cfg, mdaa::Phase2Scheme::CJT, mdaa::SelectionObjective::Harmonic);
  const auto best = mdaa::exhaustive_select(problem);

  CHECK(find(reports, "Baseline", 300.0).mean_rate == baseline);
  CHECK(find(reports, "Baseline", 300.0).relative_improvement == 1.0);
  CHECK(find(reports, "Phase2CJT", 300.0).mean_rate == cjt);
  const auto& dmimo = find(reports, "DmimoCJT/Exhaustive", 300.0);
  CHECK(dmimo.mean_bits == best.throughput.bits_delivered);
  CHECK(dmimo.mean_selected_ues == static_cast<double>(best.chosen_set.size()));
  CHECK(dmimo.confidence_halfwidth == 0.0);
  CHECK(dmimo.trials == 1);
}

TEST_CASE("Experiment series labels and report layout") {
  const auto reports = mdaa::run_experiment(small_spec());
  std::set<std::string> labels;
  for (const auto& r : reports) labels.insert(r.scheme);
  const std::set<std::string> expected{
      "Baseline",         "Phase1Only/min",        "Phase1Only/median",  "Phase1Only/max",
      "Phase2CJT",        "Phase2NCJT",            "DmimoCJT/Exhaustive", "DmimoCJT/Greedy",
      "DmimoCJT/All",     "DmimoNCJT/Exhaustive",  "DmimoNCJT/Greedy",   "DmimoNCJT/All"};
  CHECK(labels == expected);
  CHECK(reports.size() == 2 * expected.size());
  for (double x : {200.0, 600.0}) {
    const auto& lo = find(reports, "Phase1Only/min", x);
    const auto& mid = find(reports, "Phase1Only/median", x);
    const auto& hi = find(reports, "Phase1Only/max", x);
    CHECK(lo.mean_rate <= mid.mean_rate);
    CHECK(mid.mean_rate <= hi.mean_rate);
    // Exhaustive search includes the direct link and every greedy/all candidate.
    const auto& ex = find(reports, "DmimoCJT/Exhaustive", x);
    CHECK(ex.mean_bits >= find(reports, "DmimoCJT/Greedy", x).mean_bits * (1 - 1e-12));
    CHECK(ex.mean_bits >= find(reports, "DmimoCJT/All", x).mean_bits * (1 - 1e-12));
    CHECK(ex.mean_bits >= find(reports, "Baseline", x).mean_bits * (1 - 1e-12));
  }
  CHECK(find(reports, "Baseline", 600.0).mean_bits < find(reports, "Baseline", 200.0).mean_bits);
}

TEST_CASE("Results do not depend on the thread count") {
  auto spec = small_spec();
  spec.threads = 1;
  const std::string serial = csv_of(mdaa::run_experiment(spec));
  spec.threads = 3;
  CHECK(csv_of(mdaa::run_experiment(spec)) == serial);
}

TEST_CASE("Experiment validation rejects bad specs before running") {
  auto spec = small_spec();
  spec.trials = 0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = small_spec();
  spec.sweep_values = {};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = small_spec();
  spec.sweep_values = {600.0, 200.0};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = small_spec();
  spec.selection_methods = {};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = small_spec();
  spec.scenario.bs_rx_antennas = 3;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = small_spec();
  spec.scenario.num_collaborators = 21;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = small_spec();
  spec.sweep_variable = mdaa::SweepVariable::NumUes;
  spec.sweep_values = {0.5};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  CHECK_THROWS_AS(mdaa::run_experiment(spec), std::invalid_argument);
}

TEST_CASE("apply_sweep maps NumUes to collaborators") {
  const mdaa::ScenarioConfig base;
  CHECK(mdaa::apply_sweep(base, mdaa::SweepVariable::NumUes, 1.0).num_collaborators == 0);
  CHECK(mdaa::apply_sweep(base, mdaa::SweepVariable::NumUes, 10.0).num_collaborators == 9);
  CHECK(mdaa::apply_sweep(base, mdaa::SweepVariable::MdaaRadius, 70.0).mdaa_radius == 70.0);
  CHECK(mdaa::apply_sweep(base, mdaa::SweepVariable::BsDistance, 900.0).bs_distance == 900.0);
}

TEST_CASE("CSV output") {
  SECTION("header only for no reports") {
    const std::string csv = csv_of({});
    CHECK(csv ==
          "sweep_variable,sweep_value,scheme,power_mode,mean_rate_bps_hz,mean_bits_per_s,"
          "relative_improvement,mean_selected_ues,trials,ci95_halfwidth\n");
  }
  SECTION("one report is two lines with ten fields") {
    mdaa::CapacityReport r;
    r.sweep_value = 100.0;
    r.scheme = "Baseline";
    r.mean_rate = 0.1;
    r.mean_bits = 1e6;
    r.relative_improvement = 1.0;
    r.trials = 5;
    const std::string csv = csv_of({r});
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
    const std::string row = csv.substr(csv.find('\n') + 1);
    CHECK(row == "BsDistance,100,Baseline,FullPower,0.1,1e+06,1,0,5,0\n");
  }
  SECTION("identical runs write identical bytes") {
    auto spec = small_spec();
    spec.trials = 3;
    CHECK(csv_of(mdaa::run_experiment(spec)) == csv_of(mdaa::run_experiment(spec)));
  }
  SECTION("unwritable path names the path") {
    const std::filesystem::path bad = "/nonexistent-dir/out.csv";
    REQUIRE_THROWS_AS(mdaa::emit_csv({}, bad), std::runtime_error);
    try {
      mdaa::emit_csv({}, bad);
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()).find(bad.string()) != std::string::npos);
    }
  }
  SECTION("emit_csv writes the same bytes as write_csv") {
    const auto path = std::filesystem::temp_directory_path() / "mdaa_emit_test.csv";
    mdaa::CapacityReport r;
    r.scheme = "X";
    mdaa::emit_csv({r}, path);
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == csv_of({r}));
    std::filesystem::remove(path);
  }
}

TEST_CASE("Figure presets") {
  mdaa::FigureOverrides small;
  small.trials = 2;
  small.seed = 42;

  SECTION("fig3 sweeps the radius with four Phase-1 series") {
    const auto specs = mdaa::figure_specs(mdaa::FigureId::Fig3, small);
    REQUIRE(specs.size() == 1);
    CHECK(specs[0].sweep_variable == mdaa::SweepVariable::MdaaRadius);
    CHECK(specs[0].sweep_values.front() == 10.0);
    CHECK(specs[0].sweep_values.back() == 200.0);
    small.sweep_values = std::vector<double>{20.0};
    const auto reports = mdaa::reproduce_figure(mdaa::FigureId::Fig3, small);
    CHECK(reports.size() == 4);
    CHECK(find(reports, "Phase1Only/maxmin", 20.0).mean_rate >=
          find(reports, "Phase1Only/min", 20.0).mean_rate - 1e-9);
  }
  SECTION("fig4 runs one series per UE count") {
    const auto specs = mdaa::figure_specs(mdaa::FigureId::Fig4, small);
    REQUIRE(specs.size() == 10);
    for (int u = 1; u <= 10; ++u) {
      CHECK(specs[static_cast<std::size_t>(u - 1)].scenario.num_collaborators == u - 1);
      CHECK(specs[static_cast<std::size_t>(u - 1)].scenario.power_mode == mdaa::PowerMode::FullPower);
    }
    small.sweep_values = std::vector<double>{300.0};
    const auto reports = mdaa::reproduce_figure(mdaa::FigureId::Fig4, small);
    CHECK(reports.size() == 11);
    // With U = 1 the coherent rate is the direct link.
    CHECK(find(reports, "Phase2CJT/U=1", 300.0).mean_rate == find(reports, "Baseline/U=1", 300.0).mean_rate);
    // Same seeds across series: adding collaborators at full power never lowers a trial's rate.
    for (int u = 2; u <= 10; ++u) {
      CHECK(find(reports, "Phase2CJT/U=" + std::to_string(u), 300.0).mean_rate >=
            find(reports, "Phase2CJT/U=" + std::to_string(u - 1), 300.0).mean_rate);
    }
  }
  SECTION("fig5, fig7 and fig9 use normalized power") {
    CHECK(mdaa::figure_specs(mdaa::FigureId::Fig5, small)[0].scenario.power_mode ==
          mdaa::PowerMode::Normalized);
    CHECK(mdaa::figure_specs(mdaa::FigureId::Fig7, small)[0].scenario.power_mode ==
          mdaa::PowerMode::Normalized);
    const auto fig9 = mdaa::figure_specs(mdaa::FigureId::Fig9, small);
    REQUIRE(fig9.size() == 2);
    CHECK(fig9[1].scenario.power_mode == mdaa::PowerMode::Normalized);
  }
  SECTION("fig8 compares three selectors at R = 200") {
    const auto specs = mdaa::figure_specs(mdaa::FigureId::Fig8, small);
    REQUIRE(specs.size() == 1);
    CHECK(specs[0].scenario.mdaa_radius == 200.0);
    CHECK(specs[0].selection_methods.size() == 3);
  }
  SECTION("overrides apply") {
    small.power_mode = mdaa::PowerMode::Normalized;
    small.bs_link_condition = mdaa::LinkCondition::LOS;
    const auto specs = mdaa::figure_specs(mdaa::FigureId::Fig6, small);
    CHECK(specs[0].scenario.power_mode == mdaa::PowerMode::Normalized);
    CHECK(specs[0].scenario.bs_link_condition == mdaa::LinkCondition::LOS);
    CHECK(specs[0].scenario.rng_seed == 42);
    CHECK(specs[0].trials == 2);
    CHECK(mdaa::figure_specs(mdaa::FigureId::Fig9, small).size() == 1);
  }
}

TEST_CASE("Full power beats normalized power for the same draws") {
  auto spec = small_spec();
  spec.schemes = {mdaa::Scheme::Phase2CJT};
  spec.scenario.power_mode = mdaa::PowerMode::FullPower;
  const auto full = mdaa::run_experiment(spec);
  spec.scenario.power_mode = mdaa::PowerMode::Normalized;
  const auto norm = mdaa::run_experiment(spec);
  for (std::size_t i = 0; i < full.size(); ++i) CHECK(full[i].mean_rate > norm[i].mean_rate);
}

TEST_CASE("Enum names round-trip") {
  for (auto v : {mdaa::SweepVariable::BsDistance, mdaa::SweepVariable::NumUes, mdaa::SweepVariable::MdaaRadius}) {
    CHECK(mdaa::parse_sweep_variable(mdaa::to_string(v)) == v);
  }
  for (auto f : {mdaa::FigureId::Fig3, mdaa::FigureId::Fig6, mdaa::FigureId::Fig9}) {
    CHECK(mdaa::parse_figure_id(mdaa::to_string(f)) == f);
  }
  CHECK(mdaa::parse_power_mode("full") == mdaa::PowerMode::FullPower);
  CHECK(mdaa::parse_power_mode("Normalized") == mdaa::PowerMode::Normalized);
  CHECK(mdaa::parse_link_condition("prob") == mdaa::LinkCondition::ProbabilisticLOS);
  CHECK_THROWS_AS(mdaa::parse_figure_id("fig10"), std::invalid_argument);
  CHECK_THROWS_AS(mdaa::parse_scheme("Nope"), std::invalid_argument);
}

TEST_CASE("pairwise_sum") {
  std::vector<double> values(1000, 0.1);
  CHECK_THAT(mdaa::pairwise_sum(values), WithinRel(100.0, 1e-13));
  CHECK(mdaa::pairwise_sum({}) == 0.0);
}
