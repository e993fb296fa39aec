#include "mdaa/mimo_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mdaa {

namespace {

// Eigenvalues below this fraction of the largest are treated as zero.
constexpr double kRelativeEigenFloor = 1e-12;

bool all_finite(const CMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
    }
  }
  return true;
}

}  // namespace

FadingRealization draw_channel(int n_rx, int n_tx, Rng& rng) {
  if (n_rx < 1 || n_tx < 1) throw std::invalid_argument("draw_channel: dimensions must be >= 1");
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  FadingRealization h{CMatrix(n_rx, n_tx)};
  // Column-major fill keeps the draw order independent of Eigen internals.
  for (int j = 0; j < n_tx; ++j) {
    for (int i = 0; i < n_rx; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      h.entries(i, j) = {re, im};
    }
  }
  return h;
}

RVector hermitian_eigenvalues(const CMatrix& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: eigensolver did not converge");
  }
  RVector values = solver.eigenvalues().reverse();
  return values;
}

RVector gram_eigenvalues(const CMatrix& m) {
  const Eigen::Index n = m.cols();
  RVector result = RVector::Zero(n);
  if (m.rows() == 0 || n == 0) return result;
  const RVector values = m.rows() < n ? hermitian_eigenvalues(m * m.adjoint())
                                      : hermitian_eigenvalues(m.adjoint() * m);
  const double largest = std::max(values.size() > 0 ? values(0) : 0.0, 0.0);
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    result(i) = values(i) > kRelativeEigenFloor * largest ? values(i) : 0.0;
  }
  return result;
}

double logdet_capacity(const CMatrix& m, double snr_scale) {
  if (!(snr_scale >= 0.0)) throw std::invalid_argument("logdet_capacity: snr_scale must be >= 0");
  if (!all_finite(m)) throw std::invalid_argument("logdet_capacity: non-finite matrix entries");
  if (snr_scale == 0.0) return 0.0;
  const RVector lambda = gram_eigenvalues(m);
  double rate = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) rate += std::log2(1.0 + snr_scale * lambda(i));
  return rate;
}

SvdResult svd_decompose(const CMatrix& channel) {
  Eigen::JacobiSVD<CMatrix> svd(channel, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

PowerAllocation waterfill(std::span<const double> eigenvalues, double total_power,
                          double noise_scale) {
  if (!(total_power > 0.0)) throw std::invalid_argument("waterfill: total_power must be > 0");
  if (!(noise_scale > 0.0)) throw std::invalid_argument("waterfill: noise_scale must be > 0");

  const std::size_t n = eigenvalues.size();
  double largest = 0.0;
  for (double v : eigenvalues) {
    if (v < 0.0 || !std::isfinite(v)) {
      throw std::invalid_argument("waterfill: eigenvalues must be finite and non-negative");
    }
    largest = std::max(largest, v);
  }
  if (largest <= 0.0) throw std::domain_error("waterfill: all eigenvalues are zero");

  // Usable streams ordered by decreasing gain (index order breaks ties).
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (eigenvalues[i] > kRelativeEigenFloor * largest) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return eigenvalues[a] > eigenvalues[b]; });

  // Drop the weakest stream until the water level clears every active floor.
  std::size_t active = order.size();
  double level = 0.0;
  while (active > 0) {
    double inverse_sum = 0.0;
    for (std::size_t k = 0; k < active; ++k) inverse_sum += 1.0 / (noise_scale * eigenvalues[order[k]]);
    level = (total_power + inverse_sum) / static_cast<double>(active);
    if (level - 1.0 / (noise_scale * eigenvalues[order[active - 1]]) > 0.0) break;
    --active;
  }

  PowerAllocation allocation;
  allocation.per_stream.assign(n, 0.0);
  allocation.total = total_power;
  for (std::size_t k = 0; k < active; ++k) {
    const std::size_t i = order[k];
    allocation.per_stream[i] = level - 1.0 / (noise_scale * eigenvalues[i]);
  }
  return allocation;
}

double allocation_capacity(std::span<const double> eigenvalues, std::span<const double> power,
                           double noise_scale) {
  if (eigenvalues.size() != power.size()) {
    throw std::invalid_argument("allocation_capacity: size mismatch");
  }
  double rate = 0.0;
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    rate += std::log2(1.0 + noise_scale * eigenvalues[i] * power[i]);
  }
  return rate;
}

double waterfilled_capacity(const CMatrix& m, double total_power, double noise_scale) {
  const RVector lambda = gram_eigenvalues(m);
  if (lambda.size() == 0 || lambda(0) <= 0.0) return 0.0;
  const std::span<const double> eig(lambda.data(), static_cast<std::size_t>(lambda.size()));
  const PowerAllocation p = waterfill(eig, total_power, noise_scale);
  return allocation_capacity(eig, p.per_stream, noise_scale);
}

CMatrix psd_sqrt(const CMatrix& q) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(q);
  RVector root = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return solver.eigenvectors() * root.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace mdaa
