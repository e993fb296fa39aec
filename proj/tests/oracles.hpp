#pragma once

// Reference computations used only by tests. They avoid the library's own
// eigen/water-filling path so they can serve as independent checks.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

namespace mdaa::oracle {

inline double rate_sum(const std::vector<double>& gains, const std::vector<double>& power) {
  double r = 0.0;
  for (std::size_t i = 0; i < gains.size(); ++i) r += std::log2(1.0 + gains[i] * power[i]);
  return r;
}

/// Best sum rate over a grid of step `step * total` on the power simplex (n <= 3).
inline double grid_waterfill_rate(const std::vector<double>& gains, double total, double step = 1e-3) {
  const auto n = gains.size();
  const auto cells = static_cast<long>(std::llround(1.0 / step));
  double best = 0.0;
  if (n == 1) return std::log2(1.0 + gains[0] * total);
  if (n == 2) {
    for (long a = 0; a <= cells; ++a) {
      const double p1 = total * static_cast<double>(a) / static_cast<double>(cells);
      best = std::max(best, std::log2(1.0 + gains[0] * p1) + std::log2(1.0 + gains[1] * (total - p1)));
    }
    return best;
  }
  for (long a = 0; a <= cells; ++a) {
    const double p1 = total * static_cast<double>(a) / static_cast<double>(cells);
    const double r1 = std::log2(1.0 + gains[0] * p1);
    for (long b = 0; a + b <= cells; ++b) {
      const double p2 = total * static_cast<double>(b) / static_cast<double>(cells);
      const double p3 = std::max(0.0, total - p1 - p2);
      best = std::max(best, r1 + std::log2(1.0 + gains[1] * p2) + std::log2(1.0 + gains[2] * p3));
    }
  }
  return best;
}

/// Water-filling by bisection on the water level.
inline std::vector<double> bisection_waterfill(const std::vector<double>& gains, double total) {
  double lo = 0.0;
  double hi = total;
  for (double g : gains) {
    if (g > 0.0) hi = std::max(hi, total + 1.0 / g);
  }
  auto used = [&](double level) {
    double s = 0.0;
    for (double g : gains) {
      if (g > 0.0) s += std::max(0.0, level - 1.0 / g);
    }
    return s;
  };
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    (used(mid) > total ? hi : lo) = mid;
  }
  const double level = 0.5 * (lo + hi);
  std::vector<double> p(gains.size(), 0.0);
  for (std::size_t i = 0; i < gains.size(); ++i) {
    if (gains[i] > 0.0) p[i] = std::max(0.0, level - 1.0 / gains[i]);
  }
  return p;
}

/// log2|I + s M M^H| through an LU determinant.
inline double lu_logdet(const Eigen::MatrixXcd& m, double s) {
  const Eigen::MatrixXcd a =
      Eigen::MatrixXcd::Identity(m.rows(), m.rows()) + s * m * m.adjoint();
  return std::log2(std::abs(a.partialPivLu().determinant()));
}

/// Eigenvalues of M^H M from the general (non-Hermitian) complex eigensolver,
/// sorted non-increasing and clipped at zero.
inline std::vector<double> general_gram_eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m.adjoint() * m, false);
  std::vector<double> values;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    values.push_back(std::max(0.0, solver.eigenvalues()(i).real()));
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

inline Eigen::MatrixXcd random_complex(int rows, int cols, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  Eigen::MatrixXcd m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) m(i, j) = {normal(rng), normal(rng)};
  }
  return m;
}

}  // namespace mdaa::oracle
