#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "mdaa/mimo_core.hpp"
#include "mdaa/phase_capacity.hpp"
#include "mdaa/sim_harness.hpp"

namespace {

void BM_Waterfill(benchmark::State& state) {
  mdaa::Rng rng(1);
  std::uniform_real_distribution<double> u(0.01, 10.0);
  std::vector<double> eig(static_cast<std::size_t>(state.range(0)));
  for (auto& v : eig) v = u(rng);
  for (auto _ : state) benchmark::DoNotOptimize(mdaa::waterfill(eig, 4.0, 1.0));
}
BENCHMARK(BM_Waterfill)->Arg(2)->Arg(4)->Arg(20);

void BM_Phase2Cjt(benchmark::State& state) {
  mdaa::Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<mdaa::LinkBudget> budgets(n);
  std::vector<mdaa::FadingRealization> channels;
  for (auto& b : budgets) b.snr_scale = 0.3;
  for (std::size_t i = 0; i < n; ++i) channels.push_back(mdaa::draw_channel(4, 2, rng));
  for (auto _ : state) benchmark::DoNotOptimize(mdaa::phase2_cjt(budgets, channels));
}
BENCHMARK(BM_Phase2Cjt)->Arg(1)->Arg(5)->Arg(11);

void BM_MaxMinPrecoder(benchmark::State& state) {
  mdaa::ScenarioConfig cfg;
  const auto trial = mdaa::draw_trial(cfg, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mdaa::phase1_maxmin_precoder(trial.phase1_budgets, trial.phase1_channels));
  }
}
BENCHMARK(BM_MaxMinPrecoder);

void BM_ExhaustiveSelection(benchmark::State& state) {
  mdaa::ScenarioConfig cfg;
  cfg.num_collaborators = static_cast<int>(state.range(0));
  const auto trial = mdaa::draw_trial(cfg, 4);
  const auto problem =
      mdaa::make_selection_problem(trial, cfg, mdaa::Phase2Scheme::CJT, mdaa::SelectionObjective::Harmonic);
  for (auto _ : state) benchmark::DoNotOptimize(mdaa::exhaustive_select(problem));
}
BENCHMARK(BM_ExhaustiveSelection)->Arg(5)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
