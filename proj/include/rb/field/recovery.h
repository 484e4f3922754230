#pragma once

#include <vector>

#include <Eigen/Dense>

#include "rb/algebra/laurent_matrix.h"

namespace rb {
namespace field {

/// Fourier coefficients recovered from N equispaced samples by the inverse
/// DFT, p_k = (1/N) Σ_j Π(θ_j) e^{−ikθ_j}, for the N bins k ∈ (−N/2, N/2].
struct RecoveredCoefficients {
  int N = 0;
  std::vector<Eigen::MatrixXcd> bins;  // bins[k mod N]
  /// Offsets |k| ≤ N/2 − 1. Exact zeros are dropped except at k = 0.
  algebra::LaurentMatrix retained;
  /// max entrywise |p_k| over the top octave N/4 < |k| ≤ N/2.
  double aliasing_estimate = 0.0;

  const Eigen::MatrixXcd& bin(int k) const;
};

/// Requires a power-of-two sample count ≥ 8 and equally shaped samples.
RecoveredCoefficients RecoverCoefficients(
    const std::vector<Eigen::MatrixXcd>& samples);

/// Values of P at θ_j = 2πj/N + shift, j = 0..N−1, by one inverse FFT per
/// entry. Offsets are folded mod N, which is exact at these points.
std::vector<Eigen::MatrixXcd> EvaluateOnGrid(const algebra::LaurentMatrix& P, int N,
                                             double shift = 0.0);

}  // namespace field
}  // namespace rb
