#pragma once

// Collaborator subset selection for the two-phase D-MIMO link.
//
// Phase 1 and Phase 2 time-share one second: the bits delivered to the BS must
// first be multicast, so C1 T1 = C2 T2 with T1 + T2 = 1, giving
// C1 C2 / (C1 + C2) bits. The empty subset is the direct (baseline) link.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace mdaa {

struct DmimoThroughput {
  double c1 = 0.0;  // bits/s
  double c2 = 0.0;  // bits/s
  double t1 = 1.0;  // s
  double t2 = 0.0;  // s
  double bits_delivered = 0.0;
  double baseline_bits = 0.0;  // C_B (T1 + T2)
  double relative_improvement = 0.0;
};

/// Time split for two phase capacities in bits/s. When either is zero nothing
/// is delivered and the whole second is assigned to Phase 1 by convention.
/// `baseline_bits`, when positive, fills in the relative improvement.
DmimoThroughput combine_phases(double c1, double c2, double baseline_bits = 0.0);

/// Phase-2 rate (bits/s/Hz) of the transmit set {serving UE} + collaborators
/// listed in the argument. Must be pure; it may be called concurrently.
using Phase2Evaluator = std::function<double(std::span<const std::size_t>)>;

enum class SelectionObjective {
  Harmonic,  // C1 C2 / (C1 + C2)
  MinRate,   // min(C1, C2)
};

enum class SelectionMethod { Exhaustive, Greedy, All };

struct SelectionProblem {
  std::vector<double> phase1_rates;  // identity-precoder R_i^UE per collaborator, bits/s/Hz
  Phase2Evaluator phase2;
  double bandwidth_phase1 = 10e6;
  double bandwidth_phase2 = 10e6;
  SelectionObjective objective = SelectionObjective::Harmonic;
  // Phase-2 rate of the serving UE alone; evaluated through `phase2` when unset.
  std::optional<double> baseline_phase2_rate;
};

struct SelectionResult {
  std::vector<std::size_t> chosen_set;  // ascending collaborator indices
  double objective = 0.0;
  std::size_t subsets_evaluated = 0;
  SelectionMethod method = SelectionMethod::All;
  DmimoThroughput throughput;
  // Greedy only: objective after initialization and after every accepted addition.
  std::vector<double> trajectory;
};

inline constexpr std::size_t kMaxExhaustiveCollaborators = 20;

/// Throughput of `subset`; the empty subset yields the baseline over the whole second.
DmimoThroughput evaluate_subset(std::span<const std::size_t> subset,
                                const SelectionProblem& problem);

/// The scalar the selectors maximize for an evaluated subset.
double objective_value(const DmimoThroughput& throughput, bool empty_subset,
                       SelectionObjective objective);

/// Every subset including the empty one; at most kMaxExhaustiveCollaborators.
SelectionResult exhaustive_select(const SelectionProblem& problem);

/// Phase-1-first greedy selection.
///
/// Collaborators are ranked by descending Phase-1 rate (ties by index). The
/// initial set is the largest top-K prefix whose K-th rate still covers the
/// Phase-2 rate of that prefix (compared in bits/s); if no prefix qualifies,
/// all collaborators are taken. Next-ranked collaborators are then added one
/// at a time while the objective strictly improves. The result is compared
/// against the baseline and the better of the two is returned.
SelectionResult greedy_select(const SelectionProblem& problem);

/// Every available collaborator.
SelectionResult select_all(const SelectionProblem& problem);

SelectionResult run_selection(SelectionMethod method, const SelectionProblem& problem);

}  // namespace mdaa
