#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace rb {
namespace care {

inline constexpr double kDefaultTolerance = 1e-10;

/// Constant data (A, B, C) of one pointwise Riccati problem
///   P B B^H P − P A − A^H P − C^H C = 0.
struct CareInstance {
  Eigen::MatrixXcd A;  // n × n
  Eigen::MatrixXcd B;  // n × m
  Eigen::MatrixXcd C;  // p × n

  /// Throws std::invalid_argument on inconsistent shapes or non-finite data.
  void Validate() const;
};

struct CareSolution {
  Eigen::MatrixXcd P;
  Eigen::VectorXcd closed_loop_eigs;  // spectrum of A − B B^H P
  double residual = 0.0;              // spectral norm of the Riccati residual
  double hermiticity_defect = 0.0;    // ‖P − P^H‖₂
  double min_eig_P = 0.0;
  /// min |conj(λ) + μ| over closed-loop eigenvalue pairs; the Fréchet
  /// derivative of the Riccati map at P is invertible iff this is nonzero.
  double jacobian_margin = 0.0;
};

class CareError : public std::runtime_error {
 public:
  enum class Kind { kNotStabilizable, kNotDetectable, kSubspaceIllConditioned };

  CareError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::string ToString(CareError::Kind kind);

double SpectralNorm(const Eigen::MatrixXcd& m);

/// Number of singular values above tol · σ_max.
int NumericalRank(const Eigen::MatrixXcd& m, double tol);

/// rank [B AB … A^{n−1}B] == n.
bool Controllable(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B,
                  double tol = kDefaultTolerance);

/// PBH: rank [λI − A | B] == n at every eigenvalue λ of A with Re λ ≥ −tol.
bool PbhStabilizable(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B,
                     double tol = kDefaultTolerance);

/// (A, C) detectable ⇔ (A^H, C^H) stabilizable.
bool PbhDetectable(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& C,
                   double tol = kDefaultTolerance);

/// Spectral norm of P B B^H P − P A − A^H P − C^H C.
double CareResidual(const CareInstance& inst, const Eigen::MatrixXcd& P);

/// Solves F^H X + X F = Q by Bartels–Stewart on the complex Schur form of F.
/// Requires conj(λ) + μ ≠ 0 for all eigenvalues λ, μ of F.
Eigen::MatrixXcd SolveLyapunov(const Eigen::MatrixXcd& F,
                               const Eigen::MatrixXcd& Q);

/// One Newton (Kleinman) step for the Riccati map starting at Hermitian P.
Eigen::MatrixXcd NewtonStep(const CareInstance& inst, const Eigen::MatrixXcd& P);

double JacobianMargin(const Eigen::VectorXcd& eigs);

/// Stabilizing Hermitian positive semidefinite solution via the ordered
/// Schur form of the Hamiltonian [[A, −BB^H], [−C^H C, −A^H]], followed by
/// Hermitization and one Newton correction.
///
/// Throws CareError::kNotStabilizable / kNotDetectable when the PBH
/// preconditions fail, and kSubspaceIllConditioned when a Hamiltonian
/// eigenvalue sits within tol of the imaginary axis or the stable basis
/// block X₁ has condition number above 1/tol.
CareSolution SolveCare(const CareInstance& inst, double tol = kDefaultTolerance);

/// Solves the (possibly non-symmetric) equation P W P − P U − V P − X = 0
/// by taking the invariant subspace of [[U, −W], [−X, −V]] belonging to
/// its n leftmost eigenvalues. No structural checks and no guard band: this
/// is the pointwise route for data that breaks the involution hypotheses.
Eigen::MatrixXcd SolveLeftmostSplit(const Eigen::MatrixXcd& U,
                                    const Eigen::MatrixXcd& V,
                                    const Eigen::MatrixXcd& W,
                                    const Eigen::MatrixXcd& X);

}  // namespace care
}  // namespace rb
