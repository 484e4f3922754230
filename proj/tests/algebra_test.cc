#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "rb/algebra/laurent.h"
#include "rb/algebra/laurent_matrix.h"
#include "rb/algebra/weight.h"
#include "support/oracles.h"

namespace rb {
namespace algebra {
namespace {

using testing::Complex;

LaurentSeries RandomSeries(std::mt19937_64& rng, int support) {
  std::uniform_real_distribution<double> radius(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * testing::kPi);
  std::map<int, Complex> c;
  for (int k = -support; k <= support; ++k) {
    c[k] = std::polar(std::sqrt(radius(rng)), angle(rng));
  }
  return LaurentSeries(std::move(c));
}

TEST(WeightTest, Values) {
  EXPECT_EQ(WeightSequence::Unit()(17), 1.0);
  EXPECT_DOUBLE_EQ(WeightSequence::Polynomial(2.0)(-3), 16.0);
  EXPECT_DOUBLE_EQ(WeightSequence::Subexponential(1.0, 0.5)(4), std::exp(2.0));
  EXPECT_EQ(WeightSequence::Polynomial(1.5).ToString(), "poly:1.5");
  EXPECT_EQ(WeightSequence::Subexponential(0.5, 0.25).ToString(), "subexp:0.5,0.25");
}

TEST(WeightTest, RejectsInvalidParameters) {
  EXPECT_THROW(WeightSequence::Polynomial(-1.0), std::invalid_argument);
  EXPECT_THROW(WeightSequence::Polynomial(NAN), std::invalid_argument);
  EXPECT_THROW(WeightSequence::Subexponential(0.0, 0.5), std::invalid_argument);
  EXPECT_THROW(WeightSequence::Subexponential(1.0, 1.0), std::invalid_argument);
}

TEST(WeightTest, CheckWeightAllKinds) {
  for (const auto& w : {WeightSequence::Unit(), WeightSequence::Polynomial(3.0),
                        WeightSequence::Subexponential(2.0, 0.5)}) {
    const WeightReport report = CheckWeight(w, 200);
    EXPECT_TRUE(report.even_ok) << w.ToString();
    EXPECT_TRUE(report.submultiplicative_ok) << w.ToString();
    EXPECT_GE(report.grs_estimate, 1.0);
  }
  // α_K^{1/K} → 1 slowly for subexponential weights.
  EXPECT_LT(CheckWeight(WeightSequence::Polynomial(2.0), 1000).grs_estimate, 1.02);
  EXPECT_THROW(CheckWeight(WeightSequence::Unit(), 1), std::invalid_argument);
}

TEST(LaurentTest, ProductOfSymmetricLaurentPolynomial) {
  const LaurentSeries f({{-1, 1.0}, {1, 1.0}});
  const LaurentSeries g = f * f;
  EXPECT_EQ(g.coefficient(2), Complex(1.0));
  EXPECT_EQ(g.coefficient(0), Complex(2.0));
  EXPECT_EQ(g.coefficient(-2), Complex(1.0));
  EXPECT_EQ(g.coefficient(1), Complex(0.0));
  EXPECT_EQ(g.support_bound(), 2);
}

TEST(LaurentTest, RejectsNonFinite) {
  EXPECT_THROW(LaurentSeries({{0, Complex(NAN, 0.0)}}), std::invalid_argument);
  EXPECT_THROW(LaurentSeries({{3, Complex(0.0, INFINITY)}}), std::invalid_argument);
}

TEST(LaurentTest, Involutions) {
  const LaurentSeries f({{1, Complex(2.0, 3.0)}, {-2, Complex(0.0, 1.0)}});
  const LaurentSeries c = Involute(f, InvolutionKind::kCoeffConjugate);
  EXPECT_EQ(c.coefficient(1), Complex(2.0, -3.0));
  EXPECT_EQ(c.coefficient(-2), Complex(0.0, -1.0));
  const LaurentSeries h = Involute(f, InvolutionKind::kHermitianOnCircle);
  EXPECT_EQ(h.coefficient(-1), Complex(2.0, -3.0));
  EXPECT_EQ(h.coefficient(2), Complex(0.0, -1.0));

  // The hermitian involution is pointwise conjugation on the circle; the
  // coefficient one is conjugation at the reflected point.
  for (double theta : {0.3, 1.7, 4.0}) {
    EXPECT_NEAR(std::abs(GelfandEval(h, theta) - std::conj(GelfandEval(f, theta))), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(GelfandEval(c, theta) - std::conj(GelfandEval(f, -theta))), 0.0, 1e-14);
  }
}

TEST(LaurentTest, WienerNorm) {
  const LaurentSeries f({{-2, 1.0}, {0, Complex(0.0, -2.0)}, {3, 0.5}});
  EXPECT_DOUBLE_EQ(WienerNorm(f, WeightSequence::Unit()), 3.5);
  EXPECT_DOUBLE_EQ(WienerNorm(f, WeightSequence::Polynomial(1.0)), 3.0 + 2.0 + 2.0);
}

TEST(LaurentTest, GelfandEvalMatchesDirectSum) {
  const LaurentSeries f({{-1, 1.0}, {1, 1.0}});
  for (double theta = 0.0; theta < 6.3; theta += 0.37) {
    EXPECT_NEAR(std::abs(GelfandEval(f, theta) - 2.0 * std::cos(theta)), 0.0, 1e-14);
  }
}

TEST(LaurentTest, PropertySweep) {
  std::mt19937_64 rng(7);
  const std::vector<WeightSequence> weights = {WeightSequence::Unit(),
                                               WeightSequence::Polynomial(2.0),
                                               WeightSequence::Subexponential(1.0, 0.5)};
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentSeries f = RandomSeries(rng, 1 + trial % 8);
    const LaurentSeries g = RandomSeries(rng, 8 - trial % 8);
    const LaurentSeries fg = f * g;
    for (const auto& w : weights) {
      EXPECT_LE(WienerNorm(fg, w), WienerNorm(f, w) * WienerNorm(g, w) * (1 + 1e-12));
    }
    for (double theta : {0.0, 0.9, 2.5, 5.1}) {
      EXPECT_NEAR(std::abs(GelfandEval(fg, theta) - GelfandEval(f, theta) * GelfandEval(g, theta)),
                  0.0, 1e-10);
    }
    for (auto kind : {InvolutionKind::kCoeffConjugate, InvolutionKind::kHermitianOnCircle}) {
      const LaurentSeries lhs = Involute(fg, kind);
      const LaurentSeries rhs = Involute(g, kind) * Involute(f, kind);
      EXPECT_LE(WienerNorm(lhs - rhs, WeightSequence::Unit()), 1e-10);
      EXPECT_LE(WienerNorm(Involute(Involute(f, kind), kind) - f, WeightSequence::Unit()), 0.0);
    }
  }
}

TEST(LaurentMatrixTest, MultiplyAndEvaluate) {
  std::mt19937_64 rng(11);
  std::vector<LaurentSeries> a_entries, b_entries;
  for (int i = 0; i < 6; ++i) a_entries.push_back(RandomSeries(rng, 3));
  for (int i = 0; i < 6; ++i) b_entries.push_back(RandomSeries(rng, 2));
  const LaurentMatrix a(2, 3, a_entries);
  const LaurentMatrix b(3, 2, b_entries);
  const LaurentMatrix ab = a * b;
  EXPECT_EQ(ab.rows(), 2);
  EXPECT_EQ(ab.cols(), 2);
  EXPECT_EQ(ab.support_bound(), 5);
  for (double theta : {0.1, 1.3, 3.9}) {
    const Eigen::MatrixXcd direct = MatrixEval(a, theta) * MatrixEval(b, theta);
    EXPECT_LT((MatrixEval(ab, theta) - direct).norm(), 1e-12);
  }
  EXPECT_THROW(a * a, DimensionMismatch);
  EXPECT_THROW(a + b, DimensionMismatch);
  EXPECT_THROW(LaurentMatrix(2, 2, a_entries), DimensionMismatch);
}

TEST(LaurentMatrixTest, InvoluteTransposes) {
  const LaurentMatrix m(1, 2, {LaurentSeries::Monomial(1, Complex(0.0, 1.0)),
                               LaurentSeries::Constant(2.0)});
  const LaurentMatrix s = MatrixInvolute(m, InvolutionKind::kHermitianOnCircle);
  ASSERT_EQ(s.rows(), 2);
  ASSERT_EQ(s.cols(), 1);
  EXPECT_EQ(s(0, 0).coefficient(-1), Complex(0.0, -1.0));
  EXPECT_EQ(s(1, 0).coefficient(0), Complex(2.0));
  for (double theta : {0.4, 2.2}) {
    EXPECT_LT((MatrixEval(s, theta) - MatrixEval(m, theta).adjoint()).norm(), 1e-14);
  }
}

TEST(LaurentMatrixTest, FromCoefficientsRoundTrip) {
  Eigen::MatrixXcd m0(2, 2), m1(2, 2);
  m0 << 1.0, 2.0, 3.0, 4.0;
  m1 << 0.0, Complex(0.0, 1.0), 0.0, 0.0;
  const LaurentMatrix m = LaurentMatrix::FromCoefficients(2, 2, {{0, m0}, {-1, m1}});
  EXPECT_EQ(m.Coefficient(0), m0);
  EXPECT_EQ(m.Coefficient(-1), m1);
  EXPECT_EQ(m.Coefficient(5), Eigen::MatrixXcd::Zero(2, 2));
  EXPECT_EQ(m.Offsets(), (std::set<int>{-1, 0}));
}

TEST(LaurentMatrixTest, WienerNormIsSubmultiplicative) {
  std::mt19937_64 rng(5);
  const auto w = WeightSequence::Polynomial(1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<LaurentSeries> a_entries, b_entries;
    for (int i = 0; i < 4; ++i) a_entries.push_back(RandomSeries(rng, 4));
    for (int i = 0; i < 4; ++i) b_entries.push_back(RandomSeries(rng, 4));
    const LaurentMatrix a(2, 2, a_entries), b(2, 2, b_entries);
    EXPECT_LE(MatrixWienerNorm(a * b, w),
              MatrixWienerNorm(a, w) * MatrixWienerNorm(b, w) * (1 + 1e-12));
  }
}

}  // namespace
}  // namespace algebra
}  // namespace rb
