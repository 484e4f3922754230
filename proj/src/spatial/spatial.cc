#include "rb/spatial/spatial.h"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "rb/care/care.h"

namespace rb {
namespace spatial {

using algebra::LaurentMatrix;
using Eigen::MatrixXcd;

namespace {

MatrixXcd Circulant(const LaurentMatrix& m, int N) {
  const int rows = m.rows();
  const int cols = m.cols();
  MatrixXcd out = MatrixXcd::Zero(static_cast<Eigen::Index>(rows) * N,
                                  static_cast<Eigen::Index>(cols) * N);
  for (int offset : m.Offsets()) {
    const MatrixXcd block = m.Coefficient(offset);
    const int residue = ((offset % N) + N) % N;
    for (int i = 0; i < N; ++i) {
      const int j = (i + residue) % N;
      out.block(i * rows, j * cols, rows, cols) += block;
    }
  }
  return out;
}

std::string Format(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

}  // namespace

MatrixXcd CirculantTruncate(const LaurentMatrix& m, int N) {
  if (N <= 0 || N <= 2 * m.support_bound()) {
    throw SupportTooWide("ring of " + std::to_string(N) +
                         " subsystems is too small for support bound " +
                         std::to_string(m.support_bound()));
  }
  return Circulant(m, N);
}

MatrixXcd CirculantPeriodize(const LaurentMatrix& m, int N) {
  if (N <= 0) throw std::invalid_argument("ring size must be positive");
  return Circulant(m, N);
}

CirculantSystem BuildCirculantSystem(const LaurentMatrix& A, const LaurentMatrix& B,
                                     const LaurentMatrix& P, int N,
                                     algebra::InvolutionKind kind) {
  CirculantSystem system;
  system.N = N;
  system.block_a = CirculantTruncate(A, N);
  system.block_b = CirculantTruncate(B, N);
  system.block_k = CirculantPeriodize(algebra::MatrixInvolute(B, kind) * P, N);
  return system;
}

double TruncatedClosedLoopAbscissa(const LaurentMatrix& A, const LaurentMatrix& B,
                                   const LaurentMatrix& P, int N,
                                   algebra::InvolutionKind kind) {
  const MatrixXcd loop = BuildCirculantSystem(A, B, P, N, kind).ClosedLoop();
  Eigen::ComplexEigenSolver<MatrixXcd> eig(loop, /*computeEigenvectors=*/false);
  return eig.eigenvalues().real().maxCoeff();
}

GainProfile GainDecayProfile(const LaurentMatrix& B, const LaurentMatrix& P,
                             const algebra::WeightSequence& weight,
                             algebra::InvolutionKind kind) {
  const LaurentMatrix gain = algebra::MatrixInvolute(B, kind) * P;
  GainProfile profile;
  for (int k : gain.Offsets()) {
    GainRow row;
    row.k = k;
    row.norm = care::SpectralNorm(gain.Coefficient(k));
    row.weighted = weight(k) * row.norm;
    profile.weighted_sum += row.weighted;
    profile.rows.push_back(row);
  }
  return profile;
}

std::vector<std::pair<double, double>> SimulateClosedLoop(
    const LaurentMatrix& A, const LaurentMatrix& B, const LaurentMatrix& P, int N,
    const Eigen::VectorXcd& x0, double t_final, double dt,
    algebra::InvolutionKind kind) {
  if (!(dt > 0.0) || !(t_final > 0.0)) {
    throw std::invalid_argument("simulation needs dt > 0 and t_final > 0");
  }
  const MatrixXcd loop = BuildCirculantSystem(A, B, P, N, kind).ClosedLoop();
  if (x0.size() != loop.rows()) {
    throw algebra::DimensionMismatch("initial state has the wrong length");
  }
  const long steps = static_cast<long>(std::ceil(t_final / dt - 1e-9));
  const double h = t_final / static_cast<double>(steps);

  std::vector<std::pair<double, double>> trace;
  trace.reserve(static_cast<size_t>(steps + 1));
  Eigen::VectorXcd x = x0;
  trace.emplace_back(0.0, x.norm());
  for (long s = 1; s <= steps; ++s) {
    const Eigen::VectorXcd k1 = loop * x;
    const Eigen::VectorXcd k2 = loop * (x + 0.5 * h * k1);
    const Eigen::VectorXcd k3 = loop * (x + 0.5 * h * k2);
    const Eigen::VectorXcd k4 = loop * (x + h * k3);
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    trace.emplace_back(static_cast<double>(s) * h, x.norm());
  }
  return trace;
}

void WriteSimulationCsv(std::ostream& out,
                        const std::vector<std::pair<double, double>>& trace) {
  out << "t,norm\n";
  for (const auto& [t, norm] : trace) out << Format(t) << ',' << Format(norm) << '\n';
}

void WriteGainProfileCsv(std::ostream& out, const GainProfile& profile) {
  out << "k,norm,weighted\n";
  for (const auto& row : profile.rows) {
    out << row.k << ',' << Format(row.norm) << ',' << Format(row.weighted) << '\n';
  }
}

}  // namespace spatial
}  // namespace rb
