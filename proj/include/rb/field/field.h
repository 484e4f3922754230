#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rb/algebra/laurent_matrix.h"
#include "rb/care/care.h"
#include "rb/field/assumptions.h"
#include "rb/field/grid.h"

namespace rb {
namespace field {

struct FieldOptions {
  double tol = 1e-10;
  double tol_stab = 1e-8;
  /// Worker cap for pointwise solves; 0 means hardware concurrency.
  int threads = 0;
};

/// Grid supremum of the closed-loop spectral abscissa
/// max_j max Re σ(Â(θ_j) − B̂(θ_j) B̂(θ_j)^H Π(θ_j)).
struct StabilityCertificate {
  double abscissa = 0.0;
  double worst_theta = 0.0;
  std::vector<double> per_theta;
  double tol_stab = 0.0;
  bool margin_pass = false;  // abscissa < −tol_stab
};

struct FieldSolution {
  SampleGrid grid{8};
  algebra::InvolutionKind kind = algebra::InvolutionKind::kCoeffConjugate;
  std::vector<Eigen::MatrixXcd> pi_samples;  // Π(θ_j)
  algebra::LaurentMatrix P;                  // recovered, |k| ≤ N/2 − 1
  double aliasing_estimate = 0.0;
  double residual_max = 0.0;        // Riccati residual of P̂ at the grid
  double continuity_modulus = 0.0;  // max_j ‖Π(θ_{j+1}) − Π(θ_j)‖₂, cyclic
  double min_eig_min = 0.0;         // min over samples of λ_min(Π)
  double jacobian_margin_min = 0.0;
  StabilityCertificate stability;
  /// Set when the samples came from the leftmost-split route that skips the
  /// hypothesis checks; such a P is not a certified solution.
  bool forced = false;
};

class PointwiseSolveFailure : public std::runtime_error {
 public:
  PointwiseSolveFailure(double theta, care::CareError::Kind kind,
                        const std::string& detail);
  double theta() const { return theta_; }
  care::CareError::Kind care_kind() const { return care_kind_; }

 private:
  double theta_;
  care::CareError::Kind care_kind_;
};

class TargetNotReached : public std::runtime_error {
 public:
  TargetNotReached(FieldSolution last, double target);
  const FieldSolution& last() const { return last_; }
  double target() const { return target_; }

 private:
  FieldSolution last_;
  double target_;
};

/// Checks the hypotheses on `grid`, solves the Riccati equation at every
/// sample and recovers P's coefficients by inverse DFT.
/// Throws AssumptionViolation or PointwiseSolveFailure.
FieldSolution SolveField(const algebra::LaurentMatrix& A,
                         const algebra::LaurentMatrix& B,
                         const algebra::LaurentMatrix& C,
                         algebra::InvolutionKind kind, const SampleGrid& grid,
                         const FieldOptions& options = {});

/// Pointwise solutions of the algebra-level equation
///   Π (BB⋆)^ Π − Π Â − (A⋆)^ Π − (C⋆C)^ = 0
/// taking the n leftmost eigenvalues of the associated 2n×2n matrix, with no
/// hypothesis checks. Reproduces pointwise "solutions" of data that violate
/// (A1)–(A3); the result is flagged `forced`.
FieldSolution SolveFieldForced(const algebra::LaurentMatrix& A,
                               const algebra::LaurentMatrix& B,
                               const algebra::LaurentMatrix& C,
                               algebra::InvolutionKind kind,
                               const SampleGrid& grid,
                               const FieldOptions& options = {});

StabilityCertificate CertifyStability(const algebra::LaurentMatrix& A,
                                      const algebra::LaurentMatrix& B,
                                      const SampleGrid& grid,
                                      const std::vector<Eigen::MatrixXcd>& pi_samples,
                                      double tol_stab);

inline StabilityCertificate CertifyStability(const algebra::LaurentMatrix& A,
                                             const algebra::LaurentMatrix& B,
                                             const FieldSolution& solution,
                                             double tol_stab) {
  return CertifyStability(A, B, solution.grid, solution.pi_samples, tol_stab);
}

/// Doubles the grid from N0 until the continuity modulus is ≤ target or N
/// reaches N_max. Throws TargetNotReached (carrying the N_max solution) if
/// the target is still missed there.
FieldSolution RefineUntilContinuous(const algebra::LaurentMatrix& A,
                                    const algebra::LaurentMatrix& B,
                                    const algebra::LaurentMatrix& C,
                                    algebra::InvolutionKind kind, int N0,
                                    int N_max, double target,
                                    const FieldOptions& options = {});

/// 10 · (2π/N_max) · (slope estimated from the modulus at `coarse`): met by a
/// Lipschitz Π once N ≥ N_max/10, never met across a jump.
double DefaultContinuityTarget(const FieldSolution& coarse, int N_max);

/// Gelfand transform at θ of the algebra residual P BB⋆ P − PA − A⋆P − C⋆C.
Eigen::MatrixXcd AlgebraResidualAt(const algebra::LaurentMatrix& A,
                                   const algebra::LaurentMatrix& B,
                                   const algebra::LaurentMatrix& C,
                                   algebra::InvolutionKind kind,
                                   const algebra::LaurentMatrix& P,
                                   double theta);

/// max_j ‖R̂(θ_j + π/N)‖₂ on the half-step offset grid, which the coefficient
/// recovery never sampled.
double OffsetGridResidual(const algebra::LaurentMatrix& A,
                          const algebra::LaurentMatrix& B,
                          const algebra::LaurentMatrix& C,
                          algebra::InvolutionKind kind,
                          const algebra::LaurentMatrix& P, int N);

}  // namespace field
}  // namespace rb
