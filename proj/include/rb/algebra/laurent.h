#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>

#include "rb/algebra/weight.h"

namespace rb {
namespace algebra {

using Complex = std::complex<double>;

/// How ·⋆ acts on a series f(z) = Σ f_k z^k.
enum class InvolutionKind {
  /// (f⋆)_k = conj(f_k), i.e. f⋆(z) = conj(f(conj z)).
  kCoeffConjugate,
  /// (f⋆)_k = conj(f_{-k}), i.e. f⋆(z) = conj(f(z)) on the circle. For GRS
  /// weights this is also the annulus involution f⋆(z) = conj(f(1/conj z)).
  kHermitianOnCircle,
};

std::string ToString(InvolutionKind kind);
/// Accepts "coeff_conjugate" and "hermitian_on_circle".
InvolutionKind ParseInvolutionKind(const std::string& name);

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finitely supported two-sided series Σ c_k z^k standing in for an element
/// of a weighted Wiener algebra of the circle. Absent offsets are zero.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  /// Throws std::invalid_argument on non-finite coefficients.
  explicit LaurentSeries(std::map<int, Complex> coefficients);

  static LaurentSeries Constant(Complex c);
  static LaurentSeries Monomial(int k, Complex c = 1.0);

  const std::map<int, Complex>& coefficients() const { return coefficients_; }
  Complex coefficient(int k) const;
  /// max |k| over stored offsets; 0 for the empty series.
  int support_bound() const { return support_bound_; }
  bool empty() const { return coefficients_.empty(); }

  /// Σ |c_k|.
  double L1Norm() const;

  /// Drops coefficients below relative_threshold · max|c_k|.
  LaurentSeries Pruned(double relative_threshold) const;

 private:
  std::map<int, Complex> coefficients_;
  int support_bound_ = 0;
};

/// Relative magnitude below which product and sum coefficients are dropped.
inline constexpr double kPruneThreshold = 1e-15;

/// Σ α_k |f_k|.
double WienerNorm(const LaurentSeries& f, const WeightSequence& w);

/// Convolution product, (fg)_k = Σ_j f_j g_{k-j}.
LaurentSeries Multiply(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries Add(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries Subtract(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries Scale(const LaurentSeries& f, Complex c);

LaurentSeries Involute(const LaurentSeries& f, InvolutionKind kind);

/// Σ c_k e^{ikθ}, the Gelfand transform at the character z = e^{iθ}.
Complex GelfandEval(const LaurentSeries& f, double theta);

inline LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) {
  return Multiply(f, g);
}
inline LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) {
  return Add(f, g);
}
inline LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) {
  return Subtract(f, g);
}

}  // namespace algebra
}  // namespace rb
