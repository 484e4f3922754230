#include "rb/field/recovery.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>

#include <unsupported/Eigen/FFT>

#include "rb/field/grid.h"

namespace rb {
namespace field {

using Complex = std::complex<double>;

const Eigen::MatrixXcd& RecoveredCoefficients::bin(int k) const {
  const int index = ((k % N) + N) % N;
  return bins[static_cast<size_t>(index)];
}

RecoveredCoefficients RecoverCoefficients(
    const std::vector<Eigen::MatrixXcd>& samples) {
  const int N = static_cast<int>(samples.size());
  if (N < 8 || !IsPowerOfTwo(N)) {
    throw std::invalid_argument("coefficient recovery needs a power-of-two grid >= 8");
  }
  const Eigen::Index rows = samples.front().rows();
  const Eigen::Index cols = samples.front().cols();
  for (const auto& s : samples) {
    if (s.rows() != rows || s.cols() != cols) {
      throw std::invalid_argument("samples have inconsistent shapes");
    }
  }

  RecoveredCoefficients out;
  out.N = N;
  out.bins.assign(static_cast<size_t>(N), Eigen::MatrixXcd::Zero(rows, cols));

  Eigen::FFT<double> fft;
  std::vector<Complex> series(static_cast<size_t>(N));
  std::vector<Complex> spectrum;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      for (int j = 0; j < N; ++j) series[static_cast<size_t>(j)] = samples[static_cast<size_t>(j)](r, c);
      fft.fwd(spectrum, series);
      for (int k = 0; k < N; ++k) {
        out.bins[static_cast<size_t>(k)](r, c) = spectrum[static_cast<size_t>(k)] / static_cast<double>(N);
      }
    }
  }

  std::map<int, Eigen::MatrixXcd> retained;
  for (int k = -(N / 2 - 1); k <= N / 2 - 1; ++k) retained.emplace(k, out.bin(k));
  std::vector<algebra::LaurentSeries> entries;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      std::map<int, Complex> coefficients;
      for (const auto& [k, block] : retained) {
        if (k == 0 || block(r, c) != Complex(0.0)) coefficients.emplace(k, block(r, c));
      }
      entries.emplace_back(std::move(coefficients));
    }
  }
  out.retained = algebra::LaurentMatrix(static_cast<int>(rows), static_cast<int>(cols),
                                        std::move(entries));

  for (int k = N / 4 + 1; k <= N / 2; ++k) {
    out.aliasing_estimate = std::max(
        {out.aliasing_estimate, out.bin(k).cwiseAbs().maxCoeff(),
         k == N / 2 ? 0.0 : out.bin(-k).cwiseAbs().maxCoeff()});
  }
  return out;
}

std::vector<Eigen::MatrixXcd> EvaluateOnGrid(const algebra::LaurentMatrix& P, int N,
                                             double shift) {
  if (N < 1) throw std::invalid_argument("EvaluateOnGrid needs N >= 1");
  std::vector<Eigen::MatrixXcd> values(static_cast<size_t>(N),
                                       Eigen::MatrixXcd::Zero(P.rows(), P.cols()));
  Eigen::FFT<double> fft;
  std::vector<Complex> folded(static_cast<size_t>(N));
  std::vector<Complex> series;
  for (int r = 0; r < P.rows(); ++r) {
    for (int c = 0; c < P.cols(); ++c) {
      std::fill(folded.begin(), folded.end(), Complex(0.0));
      for (const auto& [k, coefficient] : P(r, c).coefficients()) {
        const int bin = ((k % N) + N) % N;
        folded[static_cast<size_t>(bin)] +=
            shift == 0.0 ? coefficient : coefficient * std::polar(1.0, k * shift);
      }
      fft.inv(series, folded);
      for (int j = 0; j < N; ++j) {
        values[static_cast<size_t>(j)](r, c) = series[static_cast<size_t>(j)] * static_cast<double>(N);
      }
    }
  }
  return values;
}

}  // namespace field
}  // namespace rb
