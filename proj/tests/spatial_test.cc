#include <cmath>
#include <sstream>

#include <gtest/gtest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "rb/field/field.h"
#include "rb/spatial/spatial.h"
#include "support/oracles.h"

namespace rb {
namespace spatial {
namespace {

using algebra::InvolutionKind;
using algebra::LaurentMatrix;
using algebra::LaurentSeries;
using Eigen::MatrixXcd;
using testing::Complex;
using testing::kPi;

LaurentMatrix Scalar(std::map<int, Complex> c) {
  return LaurentMatrix::Scalar(LaurentSeries(std::move(c)));
}

const LaurentMatrix kOne = Scalar({{0, 1.0}});
const LaurentMatrix kCorrectedA = Scalar({{-1, 1.0}, {1, 1.0}});

const field::FieldSolution& CorrectedSolution() {
  static const field::FieldSolution s = field::SolveField(
      kCorrectedA, kOne, kOne, InvolutionKind::kCoeffConjugate, field::SampleGrid(256));
  return s;
}

TEST(CirculantTest, SmallExamples) {
  MatrixXcd expected(4, 4);
  expected << 0, 1, 0, 1,
              1, 0, 1, 0,
              0, 1, 0, 1,
              1, 0, 1, 0;
  EXPECT_EQ(CirculantTruncate(kCorrectedA, 4), expected);
  EXPECT_EQ(CirculantTruncate(kOne, 3), MatrixXcd::Identity(3, 3));

  const MatrixXcd shift = CirculantTruncate(Scalar({{1, 1.0}}), 8);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      EXPECT_EQ(shift(i, j), Complex(j == (i + 1) % 8 ? 1.0 : 0.0));
    }
  }
}

TEST(CirculantTest, RejectsWideSupport) {
  EXPECT_THROW(CirculantTruncate(kCorrectedA, 2), SupportTooWide);
  EXPECT_THROW(CirculantTruncate(Scalar({{3, 1.0}}), 6), SupportTooWide);
  EXPECT_NO_THROW(CirculantPeriodize(Scalar({{3, 1.0}}), 6));
}

TEST(CirculantTest, BlockStructureAndDftDiagonalization) {
  Eigen::MatrixXcd m0(2, 2), m1(2, 2), m2(2, 2);
  m0 << 1.0, 2.0, Complex(0.0, 1.0), -1.0;
  m1 << 0.5, 0.0, 0.25, Complex(1.0, 1.0);
  m2 << 0.0, -0.3, 0.7, 0.0;
  const LaurentMatrix M = LaurentMatrix::FromCoefficients(2, 2, {{0, m0}, {1, m1}, {-2, m2}});
  for (int N : {5, 8, 16}) {
    const MatrixXcd big = CirculantTruncate(M, N);
    ASSERT_EQ(big.rows(), 2 * N);
    for (int i = 0; i < N; ++i) {
      for (int j = 0; j < N; ++j) {
        EXPECT_EQ(big.block(2 * i, 2 * j, 2, 2), big.block(0, 2 * (((j - i) % N + N) % N), 2, 2));
      }
    }
    // Conjugating by the block DFT gives matrix_eval at the N-th roots.
    MatrixXcd F = MatrixXcd::Zero(2 * N, 2 * N);
    for (int j = 0; j < N; ++j) {
      for (int l = 0; l < N; ++l) {
        F.block(2 * l, 2 * j, 2, 2) =
            std::polar(1.0 / std::sqrt(N), 2.0 * kPi * j * l / N) * MatrixXcd::Identity(2, 2);
      }
    }
    const MatrixXcd D = F.adjoint() * big * F;
    for (int j = 0; j < N; ++j) {
      EXPECT_LT((D.block(2 * j, 2 * j, 2, 2) - algebra::MatrixEval(M, 2.0 * kPi * j / N)).norm(), 1e-12);
    }
    // Multiset spectrum equality.
    std::vector<Complex> pointwise;
    for (int j = 0; j < N; ++j) {
      Eigen::ComplexEigenSolver<MatrixXcd> eig(algebra::MatrixEval(M, 2.0 * kPi * j / N), false);
      for (int i = 0; i < 2; ++i) pointwise.push_back(eig.eigenvalues()(i));
    }
    Eigen::ComplexEigenSolver<MatrixXcd> eig(big, false);
    EXPECT_LT(testing::MultisetDistance(testing::ToVector(eig.eigenvalues()), pointwise), 1e-9);
  }
}

TEST(SpatialTest, CorrectedRingAbscissa) {
  const auto& s = CorrectedSolution();
  for (int N : {8, 16, 32}) {
    EXPECT_NEAR(TruncatedClosedLoopAbscissa(kCorrectedA, kOne, s.P, N, InvolutionKind::kCoeffConjugate),
                -1.0, 1e-9) << "N = " << N;
  }
  // The 6-ring misses θ = π/2; the nearest angles give −√2.
  EXPECT_NEAR(TruncatedClosedLoopAbscissa(kCorrectedA, kOne, s.P, 6, InvolutionKind::kCoeffConjugate),
              -std::sqrt(2.0), 1e-9);
}

TEST(SpatialTest, ClosedLoopSpectrumMatchesPointwise) {
  const auto& s = CorrectedSolution();
  for (int N : {6, 8, 16}) {
    const CirculantSystem sys =
        BuildCirculantSystem(kCorrectedA, kOne, s.P, N, InvolutionKind::kCoeffConjugate);
    std::vector<Complex> pointwise;
    for (int j = 0; j < N; ++j) {
      pointwise.push_back(-std::sqrt(std::pow(2.0 * std::cos(2.0 * kPi * j / N), 2) + 1.0));
    }
    Eigen::ComplexEigenSolver<MatrixXcd> eig(sys.ClosedLoop(), false);
    EXPECT_LT(testing::MultisetDistance(testing::ToVector(eig.eigenvalues()), pointwise), 1e-9);
  }
}

TEST(SpatialTest, TruncatedAbscissaEqualsGridCertificate) {
  const auto& s = CorrectedSolution();
  for (int N : {8, 16, 32}) {
    const auto on_grid = field::SolveField(kCorrectedA, kOne, kOne,
                                           InvolutionKind::kCoeffConjugate, field::SampleGrid(N));
    const double truncated =
        TruncatedClosedLoopAbscissa(kCorrectedA, kOne, s.P, N, InvolutionKind::kCoeffConjugate);
    EXPECT_NEAR(truncated, on_grid.stability.abscissa, 1e-9);
  }
}

TEST(SpatialTest, StableZeroGain) {
  const LaurentMatrix A = Scalar({{0, -1.0}});
  const LaurentMatrix P = Scalar({{0, 0.0}});
  for (int N : {3, 8, 17}) {
    EXPECT_NEAR(TruncatedClosedLoopAbscissa(A, kOne, P, N, InvolutionKind::kCoeffConjugate), -1.0, 1e-14);
  }
}

TEST(SpatialTest, GainProfile) {
  const auto& s = CorrectedSolution();
  const GainProfile profile = GainDecayProfile(kOne, s.P, algebra::WeightSequence::Unit(),
                                               InvolutionKind::kCoeffConjugate);
  double sum = 0.0;
  for (const auto& row : profile.rows) {
    if (std::abs(row.k) >= 30) EXPECT_LT(row.norm, 1e-8) << row.k;
    sum += row.weighted;
  }
  EXPECT_NEAR(profile.weighted_sum, sum, 1e-12);
  // K = B⋆P = P here, so the k = 1 gain is the coefficient of the closed form.
  auto pi = [](double t) { return Complex(testing::CorrectedPi(t)); };
  for (const auto& row : profile.rows) {
    if (row.k == 0 || row.k == 4) {
      EXPECT_NEAR(row.norm, std::abs(testing::FourierCoefficient(pi, row.k)), 1e-12);
    }
  }

  const GainProfile zero = GainDecayProfile(kOne, Scalar({{0, 0.0}}), algebra::WeightSequence::Unit(),
                                            InvolutionKind::kCoeffConjugate);
  for (const auto& row : zero.rows) EXPECT_EQ(row.norm, 0.0);
  EXPECT_EQ(zero.weighted_sum, 0.0);
}

TEST(SpatialTest, SimulationMatchesMatrixExponential) {
  const auto& s = CorrectedSolution();
  const int N = 16;
  Eigen::VectorXcd x0 = Eigen::VectorXcd::Zero(N);
  x0(0) = 1.0;
  const auto trace =
      SimulateClosedLoop(kCorrectedA, kOne, s.P, N, x0, 5.0, 1e-3, InvolutionKind::kCoeffConjugate);
  const MatrixXcd M =
      BuildCirculantSystem(kCorrectedA, kOne, s.P, N, InvolutionKind::kCoeffConjugate).ClosedLoop();
  ASSERT_EQ(trace.size(), 5001u);
  EXPECT_EQ(trace.front().first, 0.0);
  EXPECT_NEAR(trace.back().first, 5.0, 1e-12);
  for (size_t i : {size_t{0}, size_t{1000}, size_t{2500}, size_t{5000}}) {
    const MatrixXcd E = (trace[i].first * M).exp();
    EXPECT_NEAR(trace[i].second, (E * x0).norm(), 1e-9) << "t = " << trace[i].first;
  }
  EXPECT_LE(trace.back().second, std::exp(-0.9 * 5.0) * trace.front().second);

  // Eventually bounded by C e^{−0.9t} with C fitted on [0, 1].
  double C = 0.0;
  for (const auto& [t, norm] : trace) {
    if (t <= 1.0) C = std::max(C, norm * std::exp(0.9 * t));
  }
  for (const auto& [t, norm] : trace) EXPECT_LE(norm, C * std::exp(-0.9 * t) * (1 + 1e-9));
}

TEST(SpatialTest, ScalarDecayIsExponential) {
  const LaurentMatrix A = Scalar({{0, -1.0}});
  const LaurentMatrix P = Scalar({{0, 0.0}});
  Eigen::VectorXcd x0 = Eigen::VectorXcd::Ones(4);
  const auto trace = SimulateClosedLoop(A, kOne, P, 4, x0, 3.0, 1e-3, InvolutionKind::kCoeffConjugate);
  for (const auto& [t, norm] : trace) EXPECT_NEAR(norm, std::exp(-t) * 2.0, 1e-6);
}

TEST(SpatialTest, ZeroStateStaysZero) {
  const auto& s = CorrectedSolution();
  const auto trace = SimulateClosedLoop(kCorrectedA, kOne, s.P, 8, Eigen::VectorXcd::Zero(8), 1.0,
                                        0.01, InvolutionKind::kCoeffConjugate);
  for (const auto& [t, norm] : trace) EXPECT_EQ(norm, 0.0);
}

TEST(SpatialTest, CsvOutput) {
  std::ostringstream sim;
  WriteSimulationCsv(sim, {{0.0, 1.0}, {0.5, 0.25}});
  EXPECT_EQ(sim.str(), "t,norm\n0,1\n0.5,0.25\n");
  std::ostringstream gains;
  GainProfile profile;
  profile.rows = {{-1, 0.5, 1.0}, {0, 2.0, 2.0}};
  WriteGainProfileCsv(gains, profile);
  EXPECT_EQ(gains.str(), "k,norm,weighted\n-1,0.5,1\n0,2,2\n");
}

}  // namespace
}  // namespace spatial
}  // namespace rb
