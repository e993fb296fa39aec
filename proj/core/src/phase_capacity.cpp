#include "mdaa/phase_capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mdaa {

namespace {

void check_links(std::span<const LinkBudget> budgets,
                 std::span<const FadingRealization> channels, const char* where) {
  if (budgets.size() != channels.size()) {
    throw std::invalid_argument(std::string(where) + ": budgets and channels differ in length");
  }
  if (channels.empty()) throw std::invalid_argument(std::string(where) + ": no links");
  const auto rows = channels.front().rows();
  const auto cols = channels.front().cols();
  for (const auto& h : channels) {
    if (h.rows() != rows || h.cols() != cols) {
      throw std::invalid_argument(std::string(where) + ": channel shape mismatch");
    }
  }
}

// log2|A| for Hermitian positive definite A.
double log2_det_pd(const CMatrix& a) {
  Eigen::LLT<CMatrix> llt(a);
  if (llt.info() != Eigen::Success) throw std::runtime_error("log2_det_pd: matrix not positive definite");
  double acc = 0.0;
  const CMatrix& l = llt.matrixLLT();
  for (Eigen::Index i = 0; i < l.rows(); ++i) acc += std::log2(l(i, i).real());
  return 2.0 * acc;
}

// Euclidean projection of eigenvalues onto {x >= 0, sum x <= budget}.
RVector project_capped_simplex(RVector values, double budget) {
  values = values.cwiseMax(0.0);
  if (values.sum() <= budget) return values;
  std::vector<double> sorted(values.data(), values.data() + values.size());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double prefix = 0.0;
  double shift = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    prefix += sorted[k];
    const double candidate = (prefix - budget) / static_cast<double>(k + 1);
    if (k + 1 == sorted.size() || sorted[k + 1] <= candidate) {
      shift = candidate;
      break;
    }
  }
  return (values.array() - shift).cwiseMax(0.0).matrix();
}

CMatrix project_covariance(const CMatrix& q, double trace_budget) {
  const CMatrix hermitian = 0.5 * (q + q.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian);
  const RVector clipped = project_capped_simplex(solver.eigenvalues(), trace_budget);
  return solver.eigenvectors() * clipped.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace

Phase1Report summarize_phase1(std::vector<double> rates, PrecoderKind kind) {
  if (rates.empty()) throw std::invalid_argument("phase 1 is undefined without collaborators");
  Phase1Report report;
  report.precoder_kind = kind;
  report.per_ue_rates = rates;
  std::sort(rates.begin(), rates.end());
  const std::size_t n = rates.size();
  report.min_rate = rates.front();
  report.max_rate = rates.back();
  report.median_rate = n % 2 == 1 ? rates[n / 2] : 0.5 * (rates[n / 2 - 1] + rates[n / 2]);
  return report;
}

double phase1_link_rate(const LinkBudget& budget, const FadingRealization& channel,
                        const CMatrix& covariance) {
  const CMatrix& h = channel.entries;
  CMatrix a = CMatrix::Identity(h.rows(), h.rows());
  a.noalias() += budget.snr_scale * h * covariance * h.adjoint();
  return log2_det_pd(a);
}

Phase1Report phase1_rate_identity(std::span<const LinkBudget> budgets,
                                  std::span<const FadingRealization> channels) {
  if (channels.empty()) throw std::invalid_argument("phase 1 is undefined without collaborators");
  check_links(budgets, channels, "phase1_rate_identity");
  std::vector<double> rates;
  rates.reserve(channels.size());
  for (std::size_t i = 0; i < channels.size(); ++i) {
    rates.push_back(logdet_capacity(channels[i].entries, budgets[i].snr_scale));
  }
  return summarize_phase1(std::move(rates), PrecoderKind::Identity);
}

MaxMinResult phase1_maxmin_precoder(std::span<const LinkBudget> budgets,
                                    std::span<const FadingRealization> channels,
                                    const MaxMinSolverConfig& solver_cfg) {
  if (channels.empty()) throw std::invalid_argument("phase 1 is undefined without collaborators");
  check_links(budgets, channels, "phase1_maxmin_precoder");
  if (solver_cfg.max_iterations < 0 || solver_cfg.stall_window < 1 ||
      !(solver_cfg.step_scale > 0.0)) {
    throw std::invalid_argument("phase1_maxmin_precoder: invalid solver settings");
  }

  const Eigen::Index n_tx = channels.front().cols();
  const double trace_budget = static_cast<double>(n_tx);
  const std::size_t n_links = channels.size();

  auto evaluate = [&](const CMatrix& q, std::vector<double>& rates) {
    rates.resize(n_links);
    for (std::size_t i = 0; i < n_links; ++i) rates[i] = phase1_link_rate(budgets[i], channels[i], q);
    return *std::min_element(rates.begin(), rates.end());
  };

  CMatrix q = CMatrix::Identity(n_tx, n_tx);
  std::vector<double> rates;
  double best = evaluate(q, rates);
  CMatrix best_q = q;
  std::vector<double> best_rates = rates;

  MaxMinResult result;
  result.objective_history.push_back(best);

  int k = 0;
  for (k = 1; k <= solver_cfg.max_iterations; ++k) {
    const auto weakest = static_cast<std::size_t>(
        std::min_element(rates.begin(), rates.end()) - rates.begin());
    const CMatrix& h = channels[weakest].entries;
    const double s = budgets[weakest].snr_scale;
    CMatrix a = CMatrix::Identity(h.rows(), h.rows());
    a.noalias() += s * h * q * h.adjoint();
    const CMatrix gradient = (s / std::numbers::ln2) * h.adjoint() * a.llt().solve(h);
    const double norm = gradient.norm();
    if (!(norm > 0.0)) break;

    const double step = solver_cfg.step_scale / std::sqrt(static_cast<double>(k));
    q = project_covariance(q + (step / norm) * gradient, trace_budget);

    const double objective = evaluate(q, rates);
    if (objective > best) {
      best = objective;
      best_q = q;
      best_rates = rates;
    }
    result.objective_history.push_back(best);

    const auto window = static_cast<std::size_t>(solver_cfg.stall_window);
    if (result.objective_history.size() > window) {
      const double earlier = result.objective_history[result.objective_history.size() - 1 - window];
      if (best - earlier < solver_cfg.stall_tolerance) {
        result.converged = true;
        break;
      }
    }
  }
  result.iterations = std::min(k, solver_cfg.max_iterations);
  result.precoder = {psd_sqrt(best_q), trace_budget};
  result.report = summarize_phase1(std::move(best_rates), PrecoderKind::MaxMin);
  return result;
}

CMatrix stack_composite(std::span<const LinkBudget> budgets,
                        std::span<const FadingRealization> channels) {
  check_links(budgets, channels, "stack_composite");
  const Eigen::Index rows = channels.front().rows();
  const Eigen::Index cols = channels.front().cols();
  CMatrix composite(rows, cols * static_cast<Eigen::Index>(channels.size()));
  for (std::size_t i = 0; i < channels.size(); ++i) {
    composite.middleCols(static_cast<Eigen::Index>(i) * cols, cols) =
        std::sqrt(budgets[i].snr_scale) * channels[i].entries;
  }
  return composite;
}

Phase2Report phase2_cjt(std::span<const LinkBudget> budgets,
                        std::span<const FadingRealization> channels) {
  const CMatrix composite = stack_composite(budgets, channels);
  const auto num_ues = static_cast<int>(channels.size());
  const auto n_tx = static_cast<int>(channels.front().cols());
  const auto n_rx = static_cast<int>(channels.front().rows());

  Phase2Report report;
  report.scheme = Phase2Scheme::CJT;
  report.num_streams = std::min(num_ues * n_tx, n_rx);

  const double total_power = static_cast<double>(num_ues * n_tx);
  const RVector lambda = gram_eigenvalues(composite);
  const std::span<const double> streams(lambda.data(),
                                        static_cast<std::size_t>(report.num_streams));
  report.power_allocation.total = total_power;
  if (streams.front() <= 0.0) {
    report.power_allocation.per_stream.assign(streams.size(), 0.0);
    return report;
  }
  // snr_scale is folded into the composite, so the noise scale is one.
  report.power_allocation = waterfill(streams, total_power, 1.0);
  report.rate = allocation_capacity(streams, report.power_allocation.per_stream, 1.0);
  return report;
}

ClusterAssignment equal_cluster_split(std::size_t num_ues) {
  ClusterAssignment clusters;
  const std::size_t first = (num_ues + 1) / 2;
  for (std::size_t i = 0; i < num_ues; ++i) (i < first ? clusters.group1 : clusters.group2).push_back(i);
  return clusters;
}

Phase2Report phase2_ncjt(std::span<const LinkBudget> budgets,
                         std::span<const FadingRealization> channels,
                         const ClusterAssignment& clusters) {
  check_links(budgets, channels, "phase2_ncjt");
  const std::size_t num_ues = channels.size();
  if (clusters.group1.size() + clusters.group2.size() != num_ues) {
    throw std::invalid_argument("phase2_ncjt: clusters must partition the transmitting UEs");
  }
  std::vector<bool> seen(num_ues, false);
  for (const auto* group : {&clusters.group1, &clusters.group2}) {
    for (std::size_t idx : *group) {
      if (idx >= num_ues || seen[idx]) {
        throw std::invalid_argument("phase2_ncjt: clusters must partition the transmitting UEs");
      }
      seen[idx] = true;
    }
  }

  const Eigen::Index n_rx = channels.front().rows();
  const Eigen::Index n_tx = channels.front().cols();
  const bool both = !clusters.group1.empty() && !clusters.group2.empty();
  if (both && n_rx < 2 * n_tx) {
    throw std::invalid_argument("phase2_ncjt: two clusters need N_r^BS >= 2 N_t^UE");
  }

  auto summed = [&](const std::vector<std::size_t>& group) {
    CMatrix sum = CMatrix::Zero(n_rx, n_tx);
    for (std::size_t idx : group) sum += std::sqrt(budgets[idx].snr_scale) * channels[idx].entries;
    return sum;
  };

  const int groups = (clusters.group1.empty() ? 0 : 1) + (clusters.group2.empty() ? 0 : 1);
  CMatrix h_ncjt(n_rx, n_tx * groups);
  Eigen::Index col = 0;
  for (const auto* group : {&clusters.group1, &clusters.group2}) {
    if (group->empty()) continue;
    h_ncjt.middleCols(col, n_tx) = summed(*group);
    col += n_tx;
  }

  Phase2Report report;
  report.scheme = Phase2Scheme::NCJT;
  report.num_streams = static_cast<int>(n_tx) * groups;
  report.cluster_sizes = {clusters.group1.size(), clusters.group2.size()};
  report.rate = logdet_capacity(h_ncjt, 1.0);
  return report;
}

double baseline_rate(const LinkBudget& budget, const FadingRealization& channel) {
  return phase2_cjt(std::span(&budget, 1), std::span(&channel, 1)).rate;
}

}  // namespace mdaa
