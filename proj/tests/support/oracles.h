#pragma once

// Reference computations used by the tests. Nothing here calls into the
// library under test.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace rb {
namespace testing {

using Complex = std::complex<double>;
inline constexpr double kPi = std::numbers::pi;

inline double CorrectedPi(double theta) {
  const double c = 2.0 * std::cos(theta);
  return c + std::sqrt(c * c + 1.0);
}

inline double SecondPi(double theta) {
  const double c = std::cos(theta);
  return c + std::sqrt(c * c + 1.0);
}

/// (1/2π) ∫₀^{2π} f(θ) e^{−ikθ} dθ by adaptive Gauss–Kronrod, split at
/// `breaks` (points where f is not smooth).
inline Complex FourierCoefficient(const std::function<Complex(double)>& f, int k,
                                  std::vector<double> breaks = {}) {
  using boost::math::quadrature::gauss_kronrod;
  breaks.push_back(0.0);
  breaks.push_back(2.0 * kPi);
  std::sort(breaks.begin(), breaks.end());
  double re = 0.0;
  double im = 0.0;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i];
    const double b = breaks[i + 1];
    if (b - a <= 0.0) continue;
    auto g = [&](double t) { return f(t) * std::polar(1.0, -k * t); };
    re += gauss_kronrod<double, 61>::integrate(
        [&](double t) { return g(t).real(); }, a, b, 15, 1e-14);
    im += gauss_kronrod<double, 61>::integrate(
        [&](double t) { return g(t).imag(); }, a, b, 15, 1e-14);
  }
  return Complex(re, im) / (2.0 * kPi);
}

/// Same integral by composite 30-point Gauss–Legendre on `panels` equal
/// panels; for analytic periodic f this is exact to rounding once each panel
/// holds a few oscillations at most.
inline Complex FourierCoefficientPanels(const std::function<Complex(double)>& f, int k,
                                        int panels = 64) {
  using boost::math::quadrature::gauss;
  const double h = 2.0 * kPi / panels;
  Complex sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    auto g = [&](double t) { return f(t) * std::polar(1.0, -k * t); };
    sum += Complex(gauss<double, 30>::integrate([&](double t) { return g(t).real(); }, i * h, (i + 1) * h),
                   gauss<double, 30>::integrate([&](double t) { return g(t).imag(); }, i * h, (i + 1) * h));
  }
  return sum / (2.0 * kPi);
}

/// Same integral by tanh-sinh, which tolerates endpoint singularities
/// such as |θ − θ₀|^{1/2}.
inline Complex FourierCoefficientSingular(const std::function<Complex(double)>& f, int k,
                                          std::vector<double> breaks) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  breaks.push_back(0.0);
  breaks.push_back(2.0 * kPi);
  std::sort(breaks.begin(), breaks.end());
  double re = 0.0;
  double im = 0.0;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i];
    const double b = breaks[i + 1];
    if (b - a <= 0.0) continue;
    auto g = [&](double t) { return f(t) * std::polar(1.0, -k * t); };
    re += integrator.integrate([&](double t) { return g(t).real(); }, a, b);
    im += integrator.integrate([&](double t) { return g(t).imag(); }, a, b);
  }
  return Complex(re, im) / (2.0 * kPi);
}

/// Largest distance in an optimal-by-greedy pairing of two multisets of
/// equal size: each value in `a` takes the nearest unused value in `b`.
inline double MultisetDistance(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (const Complex& x : a) {
    size_t best = b.size();
    double best_distance = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < b.size(); ++i) {
      if (!used[i] && std::abs(x - b[i]) < best_distance) {
        best = i;
        best_distance = std::abs(x - b[i]);
      }
    }
    used[best] = true;
    worst = std::max(worst, best_distance);
  }
  return worst;
}

inline std::vector<Complex> ToVector(const Eigen::VectorXcd& v) {
  return std::vector<Complex>(v.data(), v.data() + v.size());
}

inline Eigen::MatrixXcd RandomComplex(std::mt19937_64& rng, int rows, int cols,
                                      double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  Eigen::MatrixXcd m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(normal(rng), normal(rng));
  }
  return m;
}

inline int Rank(const Eigen::MatrixXcd& m, double rel_tol = 1e-9) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) r += s(i) > rel_tol * s(0) ? 1 : 0;
  return r;
}

/// Kalman rank test, rank [B AB … A^{n−1}B] = n.
inline bool KalmanControllable(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
  const int n = static_cast<int>(A.rows());
  Eigen::MatrixXcd K(n, n * B.cols());
  Eigen::MatrixXcd block = B;
  for (int i = 0; i < n; ++i) {
    K.middleCols(i * B.cols(), B.cols()) = block;
    block = A * block;
  }
  return Rank(K) == n;
}

/// Brute-force stabilizability: rank [λI − A | B] = n at each eigenvalue
/// with Re λ ≥ 0, computed from the eigendecomposition directly.
inline bool BruteStabilizable(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
  const int n = static_cast<int>(A.rows());
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(A);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex lambda = eig.eigenvalues()(i);
    if (lambda.real() < -1e-9) continue;
    Eigen::MatrixXcd pbh(n, n + B.cols());
    pbh << lambda * Eigen::MatrixXcd::Identity(n, n) - A, B;
    if (Rank(pbh) < n) return false;
  }
  return true;
}

inline double Abscissa(const Eigen::MatrixXcd& m) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(m, false);
  return eig.eigenvalues().real().maxCoeff();
}

}  // namespace testing
}  // namespace rb
