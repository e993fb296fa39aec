#include "mdaa/selection.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mdaa {

DmimoThroughput combine_phases(double c1, double c2, double baseline_bits) {
  if (!(c1 >= 0.0) || !(c2 >= 0.0)) throw std::invalid_argument("combine_phases: negative capacity");
  DmimoThroughput out;
  out.c1 = c1;
  out.c2 = c2;
  out.baseline_bits = baseline_bits;
  if (c1 > 0.0 && c2 > 0.0) {
    const double sum = c1 + c2;
    out.t1 = c2 / sum;
    out.t2 = c1 / sum;
    // c1 * t1, written so that large c1 stays finite.
    out.bits_delivered = c2 * (c1 / sum);
  }
  if (baseline_bits > 0.0) out.relative_improvement = out.bits_delivered / baseline_bits;
  return out;
}

DmimoThroughput evaluate_subset(std::span<const std::size_t> subset,
                                const SelectionProblem& problem) {
  const std::size_t n = problem.phase1_rates.size();
  for (std::size_t idx : subset) {
    if (idx >= n) throw std::out_of_range("evaluate_subset: collaborator index out of range");
  }
  const double baseline = problem.bandwidth_phase2 *
                         (problem.baseline_phase2_rate ? *problem.baseline_phase2_rate : problem.phase2({}));
  if (subset.empty()) {
    DmimoThroughput out;
    out.c1 = 0.0;
    out.c2 = baseline;
    out.t1 = 0.0;
    out.t2 = 1.0;
    out.bits_delivered = baseline;
    out.baseline_bits = baseline;
    out.relative_improvement = baseline > 0.0 ? 1.0 : 0.0;
    return out;
  }
  double min_rate = problem.phase1_rates[subset.front()];
  for (std::size_t idx : subset) min_rate = std::min(min_rate, problem.phase1_rates[idx]);
  const double c1 = problem.bandwidth_phase1 * min_rate;
  const double c2 = problem.bandwidth_phase2 * problem.phase2(subset);
  return combine_phases(c1, c2, baseline);
}

double objective_value(const DmimoThroughput& throughput, bool empty_subset,
                       SelectionObjective objective) {
  if (empty_subset || objective == SelectionObjective::Harmonic) return throughput.bits_delivered;
  return std::min(throughput.c1, throughput.c2);
}

namespace {

SelectionResult finish(SelectionMethod method, std::vector<std::size_t> chosen,
                       const DmimoThroughput& throughput, double objective,
                       std::size_t evaluated) {
  std::sort(chosen.begin(), chosen.end());
  SelectionResult result;
  result.method = method;
  result.chosen_set = std::move(chosen);
  result.throughput = throughput;
  result.objective = objective;
  result.subsets_evaluated = evaluated;
  return result;
}

}  // namespace

SelectionResult exhaustive_select(const SelectionProblem& problem) {
  const std::size_t n = problem.phase1_rates.size();
  if (n > kMaxExhaustiveCollaborators) {
    throw std::invalid_argument("exhaustive_select: too many collaborators to enumerate");
  }
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::size_t> subset;
  subset.reserve(n);

  std::vector<std::size_t> best_set;
  DmimoThroughput best_throughput = evaluate_subset({}, problem);
  double best = objective_value(best_throughput, true, problem.objective);

  for (std::size_t mask = 1; mask < count; ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) subset.push_back(i);
    }
    const DmimoThroughput t = evaluate_subset(subset, problem);
    const double value = objective_value(t, false, problem.objective);
    if (value > best) {
      best = value;
      best_set = subset;
      best_throughput = t;
    }
  }
  return finish(SelectionMethod::Exhaustive, std::move(best_set), best_throughput, best, count);
}

SelectionResult greedy_select(const SelectionProblem& problem) {
  const std::size_t n = problem.phase1_rates.size();
  const DmimoThroughput baseline = evaluate_subset({}, problem);
  const double baseline_value = objective_value(baseline, true, problem.objective);
  std::size_t evaluated = 1;
  if (n == 0) {
    auto result = finish(SelectionMethod::Greedy, {}, baseline, baseline_value, evaluated);
    result.trajectory = {baseline_value};
    return result;
  }

  std::vector<std::size_t> ranked(n);
  std::iota(ranked.begin(), ranked.end(), std::size_t{0});
  std::stable_sort(ranked.begin(), ranked.end(), [&](std::size_t a, std::size_t b) {
    return problem.phase1_rates[a] > problem.phase1_rates[b];
  });

  // Largest prefix whose weakest Phase-1 link still covers its Phase-2 rate.
  std::size_t k_init = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const std::span<const std::size_t> prefix(ranked.data(), k);
    const double phase1_bits = problem.bandwidth_phase1 * problem.phase1_rates[ranked[k - 1]];
    const double phase2_bits = problem.bandwidth_phase2 * problem.phase2(prefix);
    ++evaluated;
    if (phase1_bits >= phase2_bits) k_init = k;
  }
  if (k_init == 0) k_init = n;

  std::vector<std::size_t> current(ranked.begin(), ranked.begin() + static_cast<long>(k_init));
  DmimoThroughput current_t = evaluate_subset(current, problem);
  double current_value = objective_value(current_t, false, problem.objective);
  ++evaluated;
  std::vector<double> trajectory{current_value};

  for (std::size_t next = k_init; next < n; ++next) {
    std::vector<std::size_t> candidate = current;
    candidate.push_back(ranked[next]);
    const DmimoThroughput t = evaluate_subset(candidate, problem);
    ++evaluated;
    const double value = objective_value(t, false, problem.objective);
    if (!(value > current_value)) break;
    current = std::move(candidate);
    current_t = t;
    current_value = value;
    trajectory.push_back(value);
  }

  SelectionResult result =
      baseline_value >= current_value
          ? finish(SelectionMethod::Greedy, {}, baseline, baseline_value, evaluated)
          : finish(SelectionMethod::Greedy, std::move(current), current_t, current_value, evaluated);
  result.trajectory = std::move(trajectory);
  return result;
}

SelectionResult select_all(const SelectionProblem& problem) {
  std::vector<std::size_t> all(problem.phase1_rates.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  const DmimoThroughput t = evaluate_subset(all, problem);
  const double value = objective_value(t, all.empty(), problem.objective);
  return finish(SelectionMethod::All, std::move(all), t, value, 1);
}

SelectionResult run_selection(SelectionMethod method, const SelectionProblem& problem) {
  switch (method) {
    case SelectionMethod::Exhaustive:
      return exhaustive_select(problem);
    case SelectionMethod::Greedy:
      return greedy_select(problem);
    case SelectionMethod::All:
      return select_all(problem);
  }
  throw std::invalid_argument("run_selection: unknown method");
}

}  // namespace mdaa
