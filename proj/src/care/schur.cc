#include "rb/care/schur.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace rb {
namespace care {
namespace {

using Complex = std::complex<double>;

// Swaps the adjacent diagonal entries k and k+1 of the upper-triangular T
// and accumulates the rotation into U.
void SwapAdjacent(Eigen::MatrixXcd& T, Eigen::MatrixXcd& U, Eigen::Index k) {
  const Complex t11 = T(k, k);
  const Complex t22 = T(k + 1, k + 1);
  // [t12; t22 - t11] spans the eigenvector belonging to t22; rotate it onto e1.
  const Complex f = T(k, k + 1);
  const Complex g = t22 - t11;
  const double norm = std::hypot(std::abs(f), std::abs(g));
  if (norm == 0.0) return;  // t11 == t22 and already decoupled
  double c;
  Complex s;
  if (std::abs(f) == 0.0) {
    c = 0.0;
    s = 1.0;
  } else {
    c = std::abs(f) / norm;
    s = (f / std::abs(f)) * std::conj(g) / norm;
  }
  Eigen::Matrix2cd G;
  G << c, s, -std::conj(s), c;

  T.middleRows(k, 2) = (G * T.middleRows(k, 2)).eval();
  T.middleCols(k, 2) = (T.middleCols(k, 2) * G.adjoint()).eval();
  U.middleCols(k, 2) = (U.middleCols(k, 2) * G.adjoint()).eval();
  T(k + 1, k) = 0.0;
  T(k, k) = t22;
  T(k + 1, k + 1) = t11;
}

OrderedSchur Reorder(const Eigen::ComplexSchur<Eigen::MatrixXcd>& schur,
                     const std::vector<bool>& mask) {
  OrderedSchur out{schur.matrixT(), schur.matrixU(), 0};
  const Eigen::Index n = out.T.rows();
  for (Eigen::Index j = 0; j < n; ++j) {
    if (!mask[static_cast<size_t>(j)]) continue;
    for (Eigen::Index k = j - 1; k >= out.leading; --k) {
      SwapAdjacent(out.T, out.U, k);
    }
    ++out.leading;
  }
  return out;
}

}  // namespace

OrderedSchur OrderedComplexSchur(const Eigen::MatrixXcd& m,
                                 const std::function<bool(Complex)>& select) {
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(m);
  std::vector<bool> mask(static_cast<size_t>(m.rows()));
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    mask[static_cast<size_t>(j)] = select(schur.matrixT()(j, j));
  }
  return Reorder(schur, mask);
}

OrderedSchur OrderedComplexSchurLeftmost(const Eigen::MatrixXcd& m, int count) {
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(m);
  std::vector<size_t> order(static_cast<size_t>(m.rows()));
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return schur.matrixT()(a, a).real() < schur.matrixT()(b, b).real();
  });
  std::vector<bool> mask(order.size(), false);
  for (int i = 0; i < count && i < static_cast<int>(order.size()); ++i) {
    mask[order[static_cast<size_t>(i)]] = true;
  }
  return Reorder(schur, mask);
}

}  // namespace care
}  // namespace rb
