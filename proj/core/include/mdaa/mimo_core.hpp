#pragma once

// Complex-matrix kernel: Rayleigh channel draws, log-det capacity, SVD,
// Hermitian eigenvalues and water-filling power allocation.

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

#include "mdaa/rf_env.hpp"

namespace mdaa {

using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

/// Small-scale fading matrix, rows = receive antennas, cols = transmit antennas.
struct FadingRealization {
  CMatrix entries;

  Eigen::Index rows() const { return entries.rows(); }
  Eigen::Index cols() const { return entries.cols(); }
};

struct Precoder {
  CMatrix entries;
  double power_budget = 0.0;  // cap on ||F||_F^2

  double frobenius_power() const { return entries.squaredNorm(); }
};

struct PowerAllocation {
  std::vector<double> per_stream;
  double total = 0.0;
};

struct SvdResult {
  CMatrix left;
  RVector singular_values;  // non-increasing
  CMatrix right;
};

/// i.i.d. CN(0, 1) entries.
FadingRealization draw_channel(int n_rx, int n_tx, Rng& rng);

/// Eigenvalues of the Hermitian matrix `a`, sorted non-increasing.
RVector hermitian_eigenvalues(const CMatrix& a);

/// Eigenvalues of M^H M (length cols(M)), non-increasing and clipped at zero.
/// Computed through whichever Gram matrix is smaller; the nonzero spectra of
/// M^H M and M M^H coincide.
RVector gram_eigenvalues(const CMatrix& m);

/// log2 |I + snr_scale * M M^H| evaluated as sum_i log2(1 + snr_scale * lambda_i(M^H M)).
double logdet_capacity(const CMatrix& m, double snr_scale);

SvdResult svd_decompose(const CMatrix& channel);

/// Water-filling over parallel channels with gains noise_scale * eigenvalues[i].
/// Throws std::domain_error when no eigenvalue is usable.
PowerAllocation waterfill(std::span<const double> eigenvalues, double total_power,
                          double noise_scale);

/// sum_i log2(1 + noise_scale * eigenvalues[i] * power[i]).
double allocation_capacity(std::span<const double> eigenvalues,
                           std::span<const double> power, double noise_scale);

/// Single-user capacity with SVD precoding and water-filled power; zero when
/// the channel carries no energy.
double waterfilled_capacity(const CMatrix& m, double total_power, double noise_scale);

/// Hermitian square root of a positive semidefinite matrix.
CMatrix psd_sqrt(const CMatrix& q);

}  // namespace mdaa
