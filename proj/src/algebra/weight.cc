#include "rb/algebra/weight.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace rb {
namespace algebra {

WeightSequence WeightSequence::Unit() {
  return WeightSequence(WeightKind::kUnit, 0.0, 0.0, 0.0);
}

WeightSequence WeightSequence::Polynomial(double s) {
  if (!std::isfinite(s) || s < 0.0) {
    throw std::invalid_argument("polynomial weight needs s >= 0");
  }
  return WeightSequence(WeightKind::kPolynomial, s, 0.0, 0.0);
}

WeightSequence WeightSequence::Subexponential(double a, double b) {
  if (!std::isfinite(a) || a <= 0.0 || !std::isfinite(b) || b < 0.0 ||
      b >= 1.0) {
    throw std::invalid_argument(
        "subexponential weight needs a > 0 and 0 <= b < 1");
  }
  return WeightSequence(WeightKind::kSubexponential, 0.0, a, b);
}

double WeightSequence::operator()(long long k) const {
  const double magnitude = static_cast<double>(std::llabs(k));
  switch (kind_) {
    case WeightKind::kUnit:
      return 1.0;
    case WeightKind::kPolynomial:
      return std::pow(1.0 + magnitude, s_);
    case WeightKind::kSubexponential:
      return std::exp(a_ * std::pow(magnitude, b_));
  }
  return 1.0;
}

std::string WeightSequence::ToString() const {
  char buffer[96];
  switch (kind_) {
    case WeightKind::kUnit:
      return "unit";
    case WeightKind::kPolynomial:
      std::snprintf(buffer, sizeof(buffer), "poly:%.17g", s_);
      return buffer;
    case WeightKind::kSubexponential:
      std::snprintf(buffer, sizeof(buffer), "subexp:%.17g,%.17g", a_, b_);
      return buffer;
  }
  return "unit";
}

double WeightValue(const WeightSequence& w, long long k) { return w(k); }

WeightReport CheckWeight(const WeightSequence& w, int K) {
  if (K < 2) throw std::invalid_argument("CheckWeight needs K >= 2");
  // pow/exp are not correctly rounded, so products that are equal in exact
  // arithmetic may come out one ulp apart.
  constexpr double kSlack = 1e-14;
  WeightReport report;
  report.even_ok = true;
  report.submultiplicative_ok = true;
  for (int k = 0; k <= K; ++k) {
    if (w(k) != w(-k)) report.even_ok = false;
  }
  for (int k = -K; k <= K && report.submultiplicative_ok; ++k) {
    for (int l = -K; l <= K; ++l) {
      const double bound = w(k) * w(l);
      if (w(k + l) > bound * (1.0 + kSlack)) {
        report.submultiplicative_ok = false;
        break;
      }
    }
  }
  report.grs_estimate = std::pow(w(K), 1.0 / K);
  return report;
}

}  // namespace algebra
}  // namespace rb
