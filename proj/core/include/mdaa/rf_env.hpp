#pragma once

// Radio environment: scenario parameters, M-DAA geometry, UMi street-canyon
// path loss, thermal noise and per-link budgets.

#include <cstdint>
#include <random>
#include <vector>

namespace mdaa {

using Rng = std::mt19937_64;

enum class PowerMode { FullPower, Normalized };

/// Propagation condition applied to a class of links.
enum class LinkCondition { LOS, NLOS, ProbabilisticLOS };

struct ScenarioConfig {
  double carrier_frequency = 7.5e9;  // Hz
  double bandwidth_phase1 = 10e6;    // Hz
  double bandwidth_phase2 = 10e6;    // Hz
  double bs_height = 20.0;           // m
  double ue_height = 2.0;            // m
  // Recorded for completeness; the UMi street-canyon formulas have no term for it.
  double avg_building_height = 20.0;  // m
  int bs_rx_antennas = 4;
  int ue_tx_antennas = 2;
  int ue_rx_antennas = 2;
  double phase1_tx_power = 26.0;         // dBm
  double phase2_tx_power_per_ue = 23.0;  // dBm
  PowerMode power_mode = PowerMode::FullPower;
  double noise_figure_bs = 9.0;  // dB
  double noise_figure_ue = 4.0;  // dB
  double mdaa_radius = 50.0;     // m
  double bs_distance = 300.0;    // m
  int num_collaborators = 10;
  std::uint64_t rng_seed = 1;

  LinkCondition bs_link_condition = LinkCondition::NLOS;
  LinkCondition ue_link_condition = LinkCondition::LOS;
  bool shadowing = false;

  /// Throws std::invalid_argument naming the first offending field.
  void validate() const;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

double distance(Point2 a, Point2 b);

struct Placement {
  Point2 serving_ue_position;
  std::vector<Point2> collaborator_positions;
  Point2 bs_position;

  friend bool operator==(const Placement&, const Placement&) = default;
};

struct LinkBudget {
  double pathloss_gain = 1.0;   // linear, G
  double tx_power = 0.0;        // W
  double symbol_energy = 0.0;   // J, P / B
  double noise_variance = 0.0;  // W
  double snr_scale = 0.0;       // E*G / (N_t * sigma^2 * T), i.e. P*G / (N_t * sigma^2)
};

inline constexpr double kMinLinkDistance = 1.0;  // m
inline constexpr double kSpeedOfLight = 299792458.0;
inline constexpr double kThermalNoiseDbmPerHz = -174.0;

double dbm_to_watt(double dbm);
double watt_to_dbm(double watt);

/// BS at the origin, serving UE at (d, 0), collaborators area-uniform in the
/// disk of radius R around the serving UE.
Placement place_mdaa(const ScenarioConfig& cfg, Rng& rng);

/// UMi street-canyon path loss (3GPP TR 38.901 Table 7.4.1-1) in dB.
///
/// `distance_3d` must be at least kMinLinkDistance. The LOS branch switches to
/// the post-breakpoint expression beyond d'_BP = 4 (h_BS - 1)(h_UT - 1) f_c / c,
/// evaluated on the 2-D distance. For UE-to-UE links both heights equal the UE
/// height. ProbabilisticLOS is not a deterministic condition and is rejected
/// here; resolve it with draw_link_condition first.
double pathloss_db(double distance_3d, double distance_2d, double tx_height, double rx_height,
                   const ScenarioConfig& cfg, bool los);

/// Convenience overload for BS-to-UE links; the 2-D distance is recovered
/// from the 3-D distance and the configured heights.
double pathloss_db(double distance_3d, const ScenarioConfig& cfg, bool los);

/// 38.901 UMi LOS probability for a 2-D distance.
double los_probability(double distance_2d);

/// Resolves a condition to LOS (true) or NLOS (false), consuming one uniform
/// draw only for ProbabilisticLOS.
bool draw_link_condition(LinkCondition condition, double distance_2d, Rng& rng);

/// Log-normal shadowing standard deviation (dB) for the UMi scenario.
double shadowing_std_db(bool los);

/// Thermal noise power in dBm over `bandwidth` Hz with noise figure `nf_db`.
double noise_power_dbm(double bandwidth, double noise_figure_db);

/// Builds a budget from a path loss already in dB.
LinkBudget make_link_budget(double tx_power_dbm, double pathloss_db_value, double bandwidth,
                            double noise_figure_db, int num_tx_antennas);

/// Budget for a BS link at the given 3-D distance, deterministic condition.
LinkBudget link_budget(double tx_power_dbm, double distance_3d, double bandwidth,
                       double noise_figure_db, const ScenarioConfig& cfg, bool los = false);

/// Per-UE transmit power in dBm when `num_ues` share the phase-2 budget.
double normalize_power(double per_ue_power_dbm, int num_ues, PowerMode mode);

}  // namespace mdaa
