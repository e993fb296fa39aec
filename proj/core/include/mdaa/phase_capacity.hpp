#pragma once

// Rate expressions for the two transmission phases.
//
// Phase 1: the serving UE multicasts to every collaborator; the multicast rate
// is the minimum per-collaborator rate. Phase 2: the M-DAA transmits to the BS
// either coherently (stacked channel, SVD precoding, water-filling) or
// non-coherently (two clusters, each sending its own streams without a
// precoder). All rates are in bits/s/Hz.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "mdaa/mimo_core.hpp"
#include "mdaa/rf_env.hpp"

namespace mdaa {

enum class PrecoderKind { Identity, MaxMin };

struct Phase1Report {
  std::vector<double> per_ue_rates;
  double min_rate = 0.0;
  double median_rate = 0.0;
  double max_rate = 0.0;
  PrecoderKind precoder_kind = PrecoderKind::Identity;
};

enum class Phase2Scheme { CJT, NCJT };

struct ClusterAssignment {
  std::vector<std::size_t> group1;
  std::vector<std::size_t> group2;
};

struct Phase2Report {
  Phase2Scheme scheme = Phase2Scheme::CJT;
  double rate = 0.0;
  int num_streams = 0;
  PowerAllocation power_allocation;  // CJT only
  std::array<std::size_t, 2> cluster_sizes{};  // NCJT only: (N1, N2)
};

struct MaxMinSolverConfig {
  int max_iterations = 500;
  double step_scale = 0.5;
  int stall_window = 50;
  double stall_tolerance = 1e-6;
};

struct MaxMinResult {
  Precoder precoder;
  Phase1Report report;
  bool converged = false;
  int iterations = 0;
  // Best objective seen after each iteration (entry 0 is the identity start).
  std::vector<double> objective_history;
};

/// Min/median/max summary over `rates`. Throws on an empty list.
Phase1Report summarize_phase1(std::vector<double> rates, PrecoderKind kind);

/// Per-collaborator rate log2|I + snr_i H_i Q H_i^H| for a transmit covariance Q = F F^H.
double phase1_link_rate(const LinkBudget& budget, const FadingRealization& channel,
                        const CMatrix& covariance);

/// Phase-1 rates with F = I (no CSI at the serving UE).
Phase1Report phase1_rate_identity(std::span<const LinkBudget> budgets,
                                  std::span<const FadingRealization> channels);

/// Common precoder maximizing the minimum collaborator rate under
/// ||F||_F^2 <= N_t, with N_s = N_t.
///
/// Projected subgradient ascent on the transmit covariance Q: each rate is
/// concave in Q, so the minimum is concave. The step follows the normalized
/// gradient of the currently weakest link with length step_scale / sqrt(k);
/// the projection clips Q's eigenvalues onto {lambda >= 0, sum lambda <= N_t}.
/// The solver starts from Q = I, tracks the best iterate, and stops once the
/// best objective has improved by less than stall_tolerance over
/// stall_window iterations (converged = true) or the iteration cap is hit.
MaxMinResult phase1_maxmin_precoder(std::span<const LinkBudget> budgets,
                                    std::span<const FadingRealization> channels,
                                    const MaxMinSolverConfig& solver_cfg = {});

/// Stacks sqrt(snr_i) H_i horizontally into an N_r x (U N_t) composite.
CMatrix stack_composite(std::span<const LinkBudget> budgets,
                        std::span<const FadingRealization> channels);

/// Coherent joint transmission: SVD of the composite channel and water-filling
/// with a total power of U * N_t.
Phase2Report phase2_cjt(std::span<const LinkBudget> budgets,
                        std::span<const FadingRealization> channels);

/// Equal split: group 1 gets the first ceil(U/2) UEs (index 0 is the serving UE).
ClusterAssignment equal_cluster_split(std::size_t num_ues);

/// Non-coherent joint transmission with two clusters summed per group.
Phase2Report phase2_ncjt(std::span<const LinkBudget> budgets,
                         std::span<const FadingRealization> channels,
                         const ClusterAssignment& clusters);

/// Direct serving-UE-to-BS capacity (SVD + water-filling, total power N_t).
double baseline_rate(const LinkBudget& budget, const FadingRealization& channel);

}  // namespace mdaa
