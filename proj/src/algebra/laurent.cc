#include "rb/algebra/laurent.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace rb {
namespace algebra {

std::string ToString(InvolutionKind kind) {
  switch (kind) {
    case InvolutionKind::kCoeffConjugate:
      return "coeff_conjugate";
    case InvolutionKind::kHermitianOnCircle:
      return "hermitian_on_circle";
  }
  return "coeff_conjugate";
}

InvolutionKind ParseInvolutionKind(const std::string& name) {
  if (name == "coeff_conjugate") return InvolutionKind::kCoeffConjugate;
  if (name == "hermitian_on_circle") return InvolutionKind::kHermitianOnCircle;
  throw std::invalid_argument("unknown involution '" + name + "'");
}

LaurentSeries::LaurentSeries(std::map<int, Complex> coefficients)
    : coefficients_(std::move(coefficients)) {
  for (const auto& [k, c] : coefficients_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("non-finite Laurent coefficient");
    }
    support_bound_ = std::max(support_bound_, std::abs(k));
  }
}

LaurentSeries LaurentSeries::Constant(Complex c) {
  return LaurentSeries({{0, c}});
}

LaurentSeries LaurentSeries::Monomial(int k, Complex c) {
  return LaurentSeries({{k, c}});
}

Complex LaurentSeries::coefficient(int k) const {
  const auto it = coefficients_.find(k);
  return it == coefficients_.end() ? Complex(0.0) : it->second;
}

double LaurentSeries::L1Norm() const {
  double total = 0.0;
  for (const auto& [k, c] : coefficients_) total += std::abs(c);
  return total;
}

LaurentSeries LaurentSeries::Pruned(double relative_threshold) const {
  double largest = 0.0;
  for (const auto& [k, c] : coefficients_) largest = std::max(largest, std::abs(c));
  std::map<int, Complex> kept;
  if (largest == 0.0) return LaurentSeries(std::move(kept));
  const double cutoff = relative_threshold * largest;
  for (const auto& [k, c] : coefficients_) {
    if (std::abs(c) >= cutoff) kept.emplace(k, c);
  }
  return LaurentSeries(std::move(kept));
}

double WienerNorm(const LaurentSeries& f, const WeightSequence& w) {
  double total = 0.0;
  for (const auto& [k, c] : f.coefficients()) total += w(k) * std::abs(c);
  return total;
}

LaurentSeries Multiply(const LaurentSeries& f, const LaurentSeries& g) {
  std::map<int, Complex> product;
  for (const auto& [j, a] : f.coefficients()) {
    for (const auto& [l, b] : g.coefficients()) product[j + l] += a * b;
  }
  return LaurentSeries(std::move(product)).Pruned(kPruneThreshold);
}

LaurentSeries Add(const LaurentSeries& f, const LaurentSeries& g) {
  std::map<int, Complex> sum = f.coefficients();
  for (const auto& [k, c] : g.coefficients()) sum[k] += c;
  return LaurentSeries(std::move(sum)).Pruned(kPruneThreshold);
}

LaurentSeries Subtract(const LaurentSeries& f, const LaurentSeries& g) {
  std::map<int, Complex> difference = f.coefficients();
  for (const auto& [k, c] : g.coefficients()) difference[k] -= c;
  return LaurentSeries(std::move(difference)).Pruned(kPruneThreshold);
}

LaurentSeries Scale(const LaurentSeries& f, Complex c) {
  std::map<int, Complex> scaled;
  for (const auto& [k, v] : f.coefficients()) scaled.emplace(k, c * v);
  return LaurentSeries(std::move(scaled)).Pruned(kPruneThreshold);
}

LaurentSeries Involute(const LaurentSeries& f, InvolutionKind kind) {
  std::map<int, Complex> image;
  for (const auto& [k, c] : f.coefficients()) {
    const int offset = kind == InvolutionKind::kCoeffConjugate ? k : -k;
    image.emplace(offset, std::conj(c));
  }
  return LaurentSeries(std::move(image));
}

Complex GelfandEval(const LaurentSeries& f, double theta) {
  Complex total = 0.0;
  for (const auto& [k, c] : f.coefficients()) {
    total += c * std::polar(1.0, static_cast<double>(k) * theta);
  }
  return total;
}

}  // namespace algebra
}  // namespace rb
