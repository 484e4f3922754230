#include "rb/field/field.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "parallel.h"
#include "rb/field/recovery.h"

namespace rb {
namespace field {

using algebra::InvolutionKind;
using algebra::LaurentMatrix;
using algebra::MatrixEval;
using algebra::MatrixInvolute;
using Eigen::MatrixXcd;

namespace {

std::string FormatTheta(double theta) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", theta);
  return buffer;
}

// The algebra products that enter the Riccati map, formed once.
struct RiccatiTerms {
  LaurentMatrix A, a_star, bb_star, c_star_c;

  RiccatiTerms(const LaurentMatrix& a, const LaurentMatrix& b,
               const LaurentMatrix& c, InvolutionKind kind)
      : A(a),
        a_star(MatrixInvolute(a, kind)),
        bb_star(b * MatrixInvolute(b, kind)),
        c_star_c(MatrixInvolute(c, kind) * c) {}

  MatrixXcd ResidualAt(const MatrixXcd& p, double theta) const {
    return p * MatrixEval(bb_star, theta) * p - p * MatrixEval(A, theta) -
           MatrixEval(a_star, theta) * p - MatrixEval(c_star_c, theta);
  }
};

double ContinuityModulus(const std::vector<MatrixXcd>& samples) {
  double modulus = 0.0;
  const size_t n = samples.size();
  for (size_t j = 0; j < n; ++j) {
    modulus = std::max(modulus, care::SpectralNorm(samples[(j + 1) % n] - samples[j]));
  }
  return modulus;
}

void FinishSolution(FieldSolution& solution) {
  const RecoveredCoefficients recovered = RecoverCoefficients(solution.pi_samples);
  solution.P = recovered.retained;
  solution.aliasing_estimate = recovered.aliasing_estimate;
  solution.continuity_modulus = ContinuityModulus(solution.pi_samples);
}

}  // namespace

PointwiseSolveFailure::PointwiseSolveFailure(double theta,
                                             care::CareError::Kind kind,
                                             const std::string& detail)
    : std::runtime_error("pointwise solve failed at theta = " + FormatTheta(theta) +
                         " (" + care::ToString(kind) + "): " + detail),
      theta_(theta),
      care_kind_(kind) {}

TargetNotReached::TargetNotReached(FieldSolution last, double target)
    : std::runtime_error("continuity modulus " + FormatTheta(last.continuity_modulus) +
                         " above target " + FormatTheta(target) + " at N = " +
                         std::to_string(last.grid.size())),
      last_(std::move(last)),
      target_(target) {}

FieldSolution SolveField(const LaurentMatrix& A, const LaurentMatrix& B,
                         const LaurentMatrix& C, InvolutionKind kind,
                         const SampleGrid& grid, const FieldOptions& options) {
  const AssumptionReport report = CheckAssumptions(A, B, C, kind, grid, options.tol);
  if (!report.all_pass()) throw AssumptionViolation(report);

  const int N = grid.size();
  std::vector<care::CareSolution> pointwise(static_cast<size_t>(N));
  internal::ParallelFor(N, options.threads, [&](int j) {
    const double theta = grid.theta(j);
    const care::CareInstance inst{MatrixEval(A, theta), MatrixEval(B, theta),
                                  MatrixEval(C, theta)};
    try {
      pointwise[static_cast<size_t>(j)] = care::SolveCare(inst, options.tol);
    } catch (const care::CareError& e) {
      throw PointwiseSolveFailure(theta, e.kind(), e.what());
    }
  });

  FieldSolution solution;
  solution.grid = grid;
  solution.kind = kind;
  solution.pi_samples.reserve(static_cast<size_t>(N));
  solution.min_eig_min = std::numeric_limits<double>::infinity();
  solution.jacobian_margin_min = std::numeric_limits<double>::infinity();
  for (const auto& s : pointwise) {
    solution.pi_samples.push_back(s.P);
    solution.min_eig_min = std::min(solution.min_eig_min, s.min_eig_P);
    solution.jacobian_margin_min = std::min(solution.jacobian_margin_min, s.jacobian_margin);
  }
  FinishSolution(solution);

  const std::vector<MatrixXcd> p_values = EvaluateOnGrid(solution.P, N);
  for (int j = 0; j < N; ++j) {
    const double theta = grid.theta(j);
    const care::CareInstance inst{MatrixEval(A, theta), MatrixEval(B, theta),
                                  MatrixEval(C, theta)};
    solution.residual_max = std::max(
        solution.residual_max, care::CareResidual(inst, p_values[static_cast<size_t>(j)]));
  }
  solution.stability = CertifyStability(A, B, solution, options.tol_stab);
  return solution;
}

FieldSolution SolveFieldForced(const LaurentMatrix& A, const LaurentMatrix& B,
                               const LaurentMatrix& C, InvolutionKind kind,
                               const SampleGrid& grid, const FieldOptions& options) {
  ValidateShapes(A, B, C);
  const RiccatiTerms terms(A, B, C, kind);
  const int N = grid.size();
  FieldSolution solution;
  solution.grid = grid;
  solution.kind = kind;
  solution.forced = true;
  solution.pi_samples.assign(static_cast<size_t>(N), MatrixXcd());
  internal::ParallelFor(N, options.threads, [&](int j) {
    const double theta = grid.theta(j);
    solution.pi_samples[static_cast<size_t>(j)] = care::SolveLeftmostSplit(
        MatrixEval(terms.A, theta), MatrixEval(terms.a_star, theta),
        MatrixEval(terms.bb_star, theta), MatrixEval(terms.c_star_c, theta));
  });
  solution.min_eig_min = std::numeric_limits<double>::quiet_NaN();
  solution.jacobian_margin_min = std::numeric_limits<double>::quiet_NaN();
  FinishSolution(solution);
  const std::vector<MatrixXcd> p_values = EvaluateOnGrid(solution.P, N);
  for (int j = 0; j < N; ++j) {
    solution.residual_max = std::max(
        solution.residual_max,
        care::SpectralNorm(terms.ResidualAt(p_values[static_cast<size_t>(j)], grid.theta(j))));
  }
  solution.stability = CertifyStability(A, B, solution, options.tol_stab);
  return solution;
}

StabilityCertificate CertifyStability(const LaurentMatrix& A, const LaurentMatrix& B,
                                      const SampleGrid& grid,
                                      const std::vector<MatrixXcd>& pi_samples,
                                      double tol_stab) {
  if (static_cast<int>(pi_samples.size()) != grid.size()) {
    throw std::invalid_argument("CertifyStability: sample count does not match grid");
  }
  StabilityCertificate cert;
  cert.tol_stab = tol_stab;
  cert.abscissa = -std::numeric_limits<double>::infinity();
  cert.per_theta.reserve(pi_samples.size());
  for (int j = 0; j < grid.size(); ++j) {
    const double theta = grid.theta(j);
    const MatrixXcd b = MatrixEval(B, theta);
    const MatrixXcd loop =
        MatrixEval(A, theta) - b * b.adjoint() * pi_samples[static_cast<size_t>(j)];
    Eigen::ComplexEigenSolver<MatrixXcd> eig(loop, /*computeEigenvectors=*/false);
    const double abscissa = eig.eigenvalues().real().maxCoeff();
    cert.per_theta.push_back(abscissa);
    if (abscissa > cert.abscissa) {
      cert.abscissa = abscissa;
      cert.worst_theta = theta;
    }
  }
  cert.margin_pass = cert.abscissa < -tol_stab;
  return cert;
}

FieldSolution RefineUntilContinuous(const LaurentMatrix& A, const LaurentMatrix& B,
                                    const LaurentMatrix& C, InvolutionKind kind,
                                    int N0, int N_max, double target,
                                    const FieldOptions& options) {
  if (!IsPowerOfTwo(N0) || !IsPowerOfTwo(N_max) || N0 > N_max) {
    throw std::invalid_argument("refinement needs powers of two N0 <= N_max");
  }
  FieldSolution solution = SolveField(A, B, C, kind, SampleGrid(N0), options);
  while (solution.continuity_modulus > target && solution.grid.size() < N_max) {
    solution = SolveField(A, B, C, kind, SampleGrid(solution.grid.size() * 2), options);
  }
  if (solution.continuity_modulus > target) {
    throw TargetNotReached(std::move(solution), target);
  }
  return solution;
}

double DefaultContinuityTarget(const FieldSolution& coarse, int N_max) {
  const double step = 2.0 * std::numbers::pi / coarse.grid.size();
  const double slope = coarse.continuity_modulus / step;
  return 10.0 * (2.0 * std::numbers::pi / N_max) * slope;
}

MatrixXcd AlgebraResidualAt(const LaurentMatrix& A, const LaurentMatrix& B,
                            const LaurentMatrix& C, InvolutionKind kind,
                            const LaurentMatrix& P, double theta) {
  return RiccatiTerms(A, B, C, kind).ResidualAt(MatrixEval(P, theta), theta);
}

double OffsetGridResidual(const LaurentMatrix& A, const LaurentMatrix& B,
                          const LaurentMatrix& C, InvolutionKind kind,
                          const LaurentMatrix& P, int N) {
  const RiccatiTerms terms(A, B, C, kind);
  const double shift = std::numbers::pi / N;
  const std::vector<MatrixXcd> p_values = EvaluateOnGrid(P, N, shift);
  double worst = 0.0;
  for (int j = 0; j < N; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / N + shift;
    worst = std::max(worst, care::SpectralNorm(
                                terms.ResidualAt(p_values[static_cast<size_t>(j)], theta)));
  }
  return worst;
}

}  // namespace field
}  // namespace rb
