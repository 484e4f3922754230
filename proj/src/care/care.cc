#include "rb/care/care.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rb/care/schur.h"

namespace rb {
namespace care {
namespace {

using Eigen::MatrixXcd;
using Complex = std::complex<double>;

bool AllFinite(const MatrixXcd& m) {
  return m.array().real().allFinite() && m.array().imag().allFinite();
}

// Reads P = X₂ X₁⁻¹ from the leading n Schur vectors and returns cond(X₁).
MatrixXcd GraphFromBasis(const MatrixXcd& basis, double* condition) {
  const Eigen::Index n = basis.cols();
  const MatrixXcd x1 = basis.topRows(n);
  const MatrixXcd x2 = basis.bottomRows(n);
  Eigen::JacobiSVD<MatrixXcd> svd(x1);
  const auto& sigma = svd.singularValues();
  *condition = sigma(n - 1) == 0.0 ? std::numeric_limits<double>::infinity()
                                   : sigma(0) / sigma(n - 1);
  // P X₁ = X₂  ⇔  X₁^H P^H = X₂^H.
  const MatrixXcd p_adjoint = x1.adjoint().fullPivLu().solve(x2.adjoint());
  return p_adjoint.adjoint();
}

MatrixXcd Hermitize(const MatrixXcd& p) { return 0.5 * (p + p.adjoint()); }

MatrixXcd ResidualMatrix(const CareInstance& inst, const MatrixXcd& P) {
  const MatrixXcd W = inst.B * inst.B.adjoint();
  return P * W * P - P * inst.A - inst.A.adjoint() * P -
         inst.C.adjoint() * inst.C;
}

}  // namespace

void CareInstance::Validate() const {
  const Eigen::Index n = A.rows();
  if (A.cols() != n || B.rows() != n || C.cols() != n) {
    throw std::invalid_argument("CareInstance: inconsistent dimensions");
  }
  if (n == 0) throw std::invalid_argument("CareInstance: empty state");
  if (!AllFinite(A) || !AllFinite(B) || !AllFinite(C)) {
    throw std::invalid_argument("CareInstance: non-finite entries");
  }
}

std::string ToString(CareError::Kind kind) {
  switch (kind) {
    case CareError::Kind::kNotStabilizable:
      return "NotStabilizable";
    case CareError::Kind::kNotDetectable:
      return "NotDetectable";
    case CareError::Kind::kSubspaceIllConditioned:
      return "SubspaceIllConditioned";
  }
  return "unknown";
}

double SpectralNorm(const MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

int NumericalRank(const MatrixXcd& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<MatrixXcd> svd(m);
  const auto& sigma = svd.singularValues();
  if (sigma(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > tol * sigma(0)) ++rank;
  }
  return rank;
}

bool Controllable(const MatrixXcd& A, const MatrixXcd& B, double tol) {
  const Eigen::Index n = A.rows();
  MatrixXcd kalman(n, n * B.cols());
  MatrixXcd block = B;
  for (Eigen::Index i = 0; i < n; ++i) {
    kalman.middleCols(i * B.cols(), B.cols()) = block;
    block = A * block;
  }
  return NumericalRank(kalman, tol) == n;
}

bool PbhStabilizable(const MatrixXcd& A, const MatrixXcd& B, double tol) {
  const Eigen::Index n = A.rows();
  Eigen::ComplexEigenSolver<MatrixXcd> eig(A, /*computeEigenvectors=*/false);
  const MatrixXcd identity = MatrixXcd::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex lambda = eig.eigenvalues()(i);
    if (lambda.real() < -tol) continue;
    MatrixXcd pencil(n, n + B.cols());
    pencil << lambda * identity - A, B;
    if (NumericalRank(pencil, tol) < n) return false;
  }
  return true;
}

bool PbhDetectable(const MatrixXcd& A, const MatrixXcd& C, double tol) {
  return PbhStabilizable(A.adjoint(), C.adjoint(), tol);
}

double CareResidual(const CareInstance& inst, const MatrixXcd& P) {
  return SpectralNorm(ResidualMatrix(inst, P));
}

MatrixXcd SolveLyapunov(const MatrixXcd& F, const MatrixXcd& Q) {
  const Eigen::Index n = F.rows();
  Eigen::ComplexSchur<MatrixXcd> schur(F);
  const MatrixXcd& T = schur.matrixT();
  const MatrixXcd& Z = schur.matrixU();
  // With F = Z T Z^H and Y = Z^H X Z:  T^H Y + Y T = Z^H Q Z.
  const MatrixXcd rhs = Z.adjoint() * Q * Z;
  MatrixXcd Y = MatrixXcd::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      Complex acc = rhs(r, c);
      for (Eigen::Index i = 0; i < r; ++i) acc -= std::conj(T(i, r)) * Y(i, c);
      for (Eigen::Index j = 0; j < c; ++j) acc -= Y(r, j) * T(j, c);
      Y(r, c) = acc / (std::conj(T(r, r)) + T(c, c));
    }
  }
  return Z * Y * Z.adjoint();
}

MatrixXcd NewtonStep(const CareInstance& inst, const MatrixXcd& P) {
  const MatrixXcd closed_loop = inst.A - inst.B * inst.B.adjoint() * P;
  const MatrixXcd delta = SolveLyapunov(closed_loop, ResidualMatrix(inst, P));
  return Hermitize(P + delta);
}

double JacobianMargin(const Eigen::VectorXcd& eigs) {
  double margin = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < eigs.size(); ++i) {
    for (Eigen::Index j = 0; j < eigs.size(); ++j) {
      margin = std::min(margin, std::abs(std::conj(eigs(i)) + eigs(j)));
    }
  }
  return margin;
}

CareSolution SolveCare(const CareInstance& inst, double tol) {
  inst.Validate();
  if (!PbhStabilizable(inst.A, inst.B, tol)) {
    throw CareError(CareError::Kind::kNotStabilizable, "(A, B) is not stabilizable");
  }
  if (!PbhDetectable(inst.A, inst.C, tol)) {
    throw CareError(CareError::Kind::kNotDetectable, "(A, C) is not detectable");
  }

  const Eigen::Index n = inst.A.rows();
  MatrixXcd H(2 * n, 2 * n);
  H << inst.A, -inst.B * inst.B.adjoint(), -inst.C.adjoint() * inst.C,
      -inst.A.adjoint();

  const OrderedSchur schur =
      OrderedComplexSchur(H, [](Complex lambda) { return lambda.real() < 0.0; });
  for (Eigen::Index i = 0; i < 2 * n; ++i) {
    if (std::abs(schur.T(i, i).real()) < tol) {
      throw CareError(CareError::Kind::kSubspaceIllConditioned,
                      "Hamiltonian eigenvalue within tolerance of the imaginary axis");
    }
  }
  if (schur.leading != n) {
    throw CareError(CareError::Kind::kSubspaceIllConditioned,
                    "Hamiltonian has no n-dimensional stable subspace");
  }
  double condition = 0.0;
  MatrixXcd P = GraphFromBasis(schur.U.leftCols(n), &condition);
  if (!(condition <= 1.0 / tol)) {
    throw CareError(CareError::Kind::kSubspaceIllConditioned,
                    "stable subspace basis is ill-conditioned (cond(X1) = " +
                        std::to_string(condition) + ")");
  }
  P = Hermitize(P);

  CareSolution solution;
  solution.residual = CareResidual(inst, P);
  const MatrixXcd refined = NewtonStep(inst, P);
  const double refined_residual = CareResidual(inst, refined);
  if (refined.allFinite() && refined_residual <= solution.residual) {
    P = refined;
    solution.residual = refined_residual;
  }

  solution.P = P;
  solution.hermiticity_defect = SpectralNorm(P - P.adjoint());
  Eigen::SelfAdjointEigenSolver<MatrixXcd> p_eig(P, Eigen::EigenvaluesOnly);
  solution.min_eig_P = p_eig.eigenvalues()(0);
  Eigen::ComplexEigenSolver<MatrixXcd> loop_eig(
      inst.A - inst.B * inst.B.adjoint() * P, /*computeEigenvectors=*/false);
  solution.closed_loop_eigs = loop_eig.eigenvalues();
  solution.jacobian_margin = JacobianMargin(solution.closed_loop_eigs);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(solution.closed_loop_eigs(i).real() < 0.0)) {
      throw CareError(CareError::Kind::kSubspaceIllConditioned,
                      "closed loop is not stable after refinement");
    }
  }
  return solution;
}

MatrixXcd SolveLeftmostSplit(const MatrixXcd& U, const MatrixXcd& V,
                             const MatrixXcd& W, const MatrixXcd& X) {
  const Eigen::Index n = U.rows();
  MatrixXcd H(2 * n, 2 * n);
  H << U, -W, -X, -V;
  const OrderedSchur schur = OrderedComplexSchurLeftmost(H, static_cast<int>(n));
  double condition = 0.0;
  return GraphFromBasis(schur.U.leftCols(n), &condition);
}

}  // namespace care
}  // namespace rb
