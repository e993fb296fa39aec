#include "mdaa/rf_env.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mdaa {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument(std::string("scenario field '") + name + "' must be positive");
  }
}

void require_non_negative(double value, const char* name) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument(std::string("scenario field '") + name +
                                "' must be non-negative");
  }
}

}  // namespace

void ScenarioConfig::validate() const {
  require_positive(carrier_frequency, "carrier_frequency");
  require_positive(bandwidth_phase1, "bandwidth_phase1");
  require_positive(bandwidth_phase2, "bandwidth_phase2");
  require_positive(bs_height, "bs_height");
  require_positive(ue_height, "ue_height");
  require_positive(bs_distance, "bs_distance");
  // A zero radius is the degenerate co-located array; powers in dBm and noise
  // figures in dB may legitimately be zero or negative.
  require_non_negative(mdaa_radius, "mdaa_radius");
  require_non_negative(noise_figure_bs, "noise_figure_bs");
  require_non_negative(noise_figure_ue, "noise_figure_ue");
  if (!std::isfinite(phase1_tx_power) || !std::isfinite(phase2_tx_power_per_ue)) {
    throw std::invalid_argument("scenario transmit powers must be finite");
  }
  if (bs_rx_antennas < 1) throw std::invalid_argument("scenario field 'bs_rx_antennas' must be >= 1");
  if (ue_tx_antennas < 1) throw std::invalid_argument("scenario field 'ue_tx_antennas' must be >= 1");
  if (ue_rx_antennas < 1) throw std::invalid_argument("scenario field 'ue_rx_antennas' must be >= 1");
  if (num_collaborators < 0) {
    throw std::invalid_argument("scenario field 'num_collaborators' must be >= 0");
  }
}

double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watt_to_dbm(double watt) { return 10.0 * std::log10(watt) + 30.0; }

Placement place_mdaa(const ScenarioConfig& cfg, Rng& rng) {
  Placement placement;
  placement.bs_position = {0.0, 0.0};
  placement.serving_ue_position = {cfg.bs_distance, 0.0};
  placement.collaborator_positions.reserve(static_cast<std::size_t>(cfg.num_collaborators));

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < cfg.num_collaborators; ++i) {
    // Area-uniform: radius ~ R sqrt(u).
    const double r = cfg.mdaa_radius * std::sqrt(unit(rng));
    const double theta = 2.0 * std::numbers::pi * unit(rng);
    placement.collaborator_positions.push_back(
        {placement.serving_ue_position.x + r * std::cos(theta),
         placement.serving_ue_position.y + r * std::sin(theta)});
  }
  return placement;
}

double pathloss_db(double distance_3d, double distance_2d, double tx_height, double rx_height,
                   const ScenarioConfig& cfg, bool los) {
  if (!(distance_3d >= kMinLinkDistance)) {
    throw std::invalid_argument("pathloss_db: distance below the 1 m validity floor");
  }
  const double fc_ghz = cfg.carrier_frequency / 1e9;
  const double h_bs = std::max(tx_height, rx_height);
  const double h_ut = std::min(tx_height, rx_height);
  constexpr double kEffectiveEnvHeight = 1.0;
  const double breakpoint = 4.0 * (h_bs - kEffectiveEnvHeight) * (h_ut - kEffectiveEnvHeight) *
                            cfg.carrier_frequency / kSpeedOfLight;

  double pl_los = 0.0;
  if (distance_2d <= breakpoint) {
    pl_los = 32.4 + 21.0 * std::log10(distance_3d) + 20.0 * std::log10(fc_ghz);
  } else {
    pl_los = 32.4 + 40.0 * std::log10(distance_3d) + 20.0 * std::log10(fc_ghz) -
             9.5 * std::log10(breakpoint * breakpoint + (h_bs - h_ut) * (h_bs - h_ut));
  }
  if (los) return pl_los;

  const double pl_nlos =
      35.3 * std::log10(distance_3d) + 22.4 + 21.3 * std::log10(fc_ghz) - 0.3 * (h_ut - 1.5);
  return std::max(pl_los, pl_nlos);
}

double pathloss_db(double distance_3d, const ScenarioConfig& cfg, bool los) {
  const double dh = cfg.bs_height - cfg.ue_height;
  const double d2 = distance_3d * distance_3d - dh * dh;
  const double distance_2d = d2 > 0.0 ? std::sqrt(d2) : 0.0;
  return pathloss_db(distance_3d, distance_2d, cfg.bs_height, cfg.ue_height, cfg, los);
}

double los_probability(double distance_2d) {
  if (distance_2d <= 18.0) return 1.0;
  return 18.0 / distance_2d + std::exp(-distance_2d / 36.0) * (1.0 - 18.0 / distance_2d);
}

bool draw_link_condition(LinkCondition condition, double distance_2d, Rng& rng) {
  switch (condition) {
    case LinkCondition::LOS:
      return true;
    case LinkCondition::NLOS:
      return false;
    case LinkCondition::ProbabilisticLOS: {
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      return unit(rng) < los_probability(distance_2d);
    }
  }
  return false;
}

double shadowing_std_db(bool los) { return los ? 4.0 : 7.82; }

double noise_power_dbm(double bandwidth, double noise_figure_db) {
  return kThermalNoiseDbmPerHz + 10.0 * std::log10(bandwidth) + noise_figure_db;
}

LinkBudget make_link_budget(double tx_power_dbm, double pathloss_db_value, double bandwidth,
                            double noise_figure_db, int num_tx_antennas) {
  LinkBudget budget;
  budget.pathloss_gain = std::pow(10.0, -pathloss_db_value / 10.0);
  budget.tx_power = dbm_to_watt(tx_power_dbm);
  budget.symbol_energy = budget.tx_power / bandwidth;
  budget.noise_variance = dbm_to_watt(noise_power_dbm(bandwidth, noise_figure_db));
  budget.snr_scale = budget.tx_power * budget.pathloss_gain /
                     (static_cast<double>(num_tx_antennas) * budget.noise_variance);
  return budget;
}

LinkBudget link_budget(double tx_power_dbm, double distance_3d, double bandwidth,
                       double noise_figure_db, const ScenarioConfig& cfg, bool los) {
  return make_link_budget(tx_power_dbm, pathloss_db(distance_3d, cfg, los), bandwidth,
                          noise_figure_db, cfg.ue_tx_antennas);
}

double normalize_power(double per_ue_power_dbm, int num_ues, PowerMode mode) {
  if (num_ues < 1) throw std::invalid_argument("normalize_power: num_ues must be >= 1");
  if (mode == PowerMode::FullPower) return per_ue_power_dbm;
  return per_ue_power_dbm - 10.0 * std::log10(static_cast<double>(num_ues));
}

}  // namespace mdaa
