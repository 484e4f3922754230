#include "rb/field/assumptions.h"

#include "rb/care/care.h"

namespace rb {
namespace field {

using algebra::LaurentMatrix;
using algebra::MatrixEval;
using Eigen::MatrixXcd;

namespace {

std::string Describe(const AssumptionReport& report) {
  std::string failed;
  const std::pair<const char*, const AssumptionCheck*> checks[] = {
      {"A1", &report.a1}, {"A2", &report.a2}, {"A3", &report.a3},
      {"A4", &report.a4}, {"A5", &report.a5}};
  for (const auto& [name, check] : checks) {
    if (check->pass) continue;
    if (!failed.empty()) failed += ", ";
    failed += name;
  }
  return "assumptions violated: " + failed;
}

void Record(AssumptionCheck& check, double theta, double defect) {
  if (defect > check.worst_defect) {
    check.worst_defect = defect;
    check.worst_theta = theta;
  }
}

void RecordFailure(AssumptionCheck& check, double theta) {
  if (check.pass) {
    check.pass = false;
    check.worst_defect = 1.0;
    check.worst_theta = theta;
  }
}

}  // namespace

AssumptionViolation::AssumptionViolation(AssumptionReport report)
    : std::runtime_error(Describe(report)), report_(report) {}

void ValidateShapes(const LaurentMatrix& A, const LaurentMatrix& B,
                    const LaurentMatrix& C) {
  const int n = A.rows();
  if (n == 0 || A.cols() != n || B.rows() != n || C.cols() != n) {
    throw algebra::DimensionMismatch(
        "expected A n×n, B n×m, C p×n with consistent n");
  }
}

AssumptionReport CheckAssumptions(const LaurentMatrix& A, const LaurentMatrix& B,
                                  const LaurentMatrix& C,
                                  algebra::InvolutionKind kind,
                                  const SampleGrid& grid, double tol) {
  ValidateShapes(A, B, C);
  const LaurentMatrix a_star = algebra::MatrixInvolute(A, kind);
  const LaurentMatrix bb_star = B * algebra::MatrixInvolute(B, kind);
  const LaurentMatrix c_star_c = algebra::MatrixInvolute(C, kind) * C;

  AssumptionReport report;
  report.grid_size = grid.size();
  for (int j = 0; j < grid.size(); ++j) {
    const double theta = grid.theta(j);
    const MatrixXcd a = MatrixEval(A, theta);
    const MatrixXcd b = MatrixEval(B, theta);
    const MatrixXcd c = MatrixEval(C, theta);
    Record(report.a1, theta, care::SpectralNorm(MatrixEval(a_star, theta) - a.adjoint()));
    Record(report.a2, theta, care::SpectralNorm(MatrixEval(bb_star, theta) - b * b.adjoint()));
    Record(report.a3, theta, care::SpectralNorm(MatrixEval(c_star_c, theta) - c.adjoint() * c));
    if (!care::PbhStabilizable(a, b, tol)) RecordFailure(report.a4, theta);
    if (!care::PbhDetectable(a, c, tol)) RecordFailure(report.a5, theta);
  }
  report.a1.pass = report.a1.worst_defect <= tol;
  report.a2.pass = report.a2.worst_defect <= tol;
  report.a3.pass = report.a3.worst_defect <= tol;
  return report;
}

}  // namespace field
}  // namespace rb
