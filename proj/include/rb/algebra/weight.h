#pragma once

#include <string>

namespace rb {
namespace algebra {

enum class WeightKind { kUnit, kPolynomial, kSubexponential };

/// An even, submultiplicative weight α on ℤ defining the Wiener algebra norm
/// ‖f‖ = Σ α_k |f_k|.
///
///   unit            α_k = 1
///   polynomial      α_k = (1 + |k|)^s,      s ≥ 0
///   subexponential  α_k = exp(a |k|^b),     a > 0, 0 ≤ b < 1
///
/// All three kinds satisfy the GRS condition lim α_k^{1/k} = 1, so the
/// maximal ideal space of the weighted algebra is the unit circle.
class WeightSequence {
 public:
  static WeightSequence Unit();
  /// Throws std::invalid_argument unless s is finite and s ≥ 0.
  static WeightSequence Polynomial(double s);
  /// Throws std::invalid_argument unless a > 0 and 0 ≤ b < 1.
  static WeightSequence Subexponential(double a, double b);

  WeightKind kind() const { return kind_; }
  double s() const { return s_; }
  double a() const { return a_; }
  double b() const { return b_; }

  double operator()(long long k) const;

  /// String form: "unit", "poly:<s>" or "subexp:<a>,<b>".
  std::string ToString() const;

 private:
  WeightSequence(WeightKind kind, double s, double a, double b)
      : kind_(kind), s_(s), a_(a), b_(b) {}

  WeightKind kind_;
  double s_ = 0.0;
  double a_ = 0.0;
  double b_ = 0.0;
};

double WeightValue(const WeightSequence& w, long long k);

struct WeightReport {
  bool even_ok = false;
  bool submultiplicative_ok = false;
  double grs_estimate = 0.0;
};

/// Scans |k|, |l| ≤ K for evenness and α_{k+l} ≤ α_k α_l, and reports
/// α_K^{1/K} as the GRS estimate. Requires K ≥ 2.
WeightReport CheckWeight(const WeightSequence& w, int K);

}  // namespace algebra
}  // namespace rb
