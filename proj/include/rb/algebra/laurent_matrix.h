#pragma once

#include <map>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "rb/algebra/laurent.h"

namespace rb {
namespace algebra {

/// A rows × cols matrix over the series algebra, stored row-major.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  /// Zero matrix.
  LaurentMatrix(int rows, int cols);
  /// Throws DimensionMismatch if entries.size() != rows·cols.
  LaurentMatrix(int rows, int cols, std::vector<LaurentSeries> entries);

  /// Builds the matrix Σ_k M_k z^k from its coefficient matrices.
  static LaurentMatrix FromCoefficients(
      int rows, int cols, const std::map<int, Eigen::MatrixXcd>& coefficients);
  static LaurentMatrix Scalar(LaurentSeries entry);
  static LaurentMatrix Constant(const Eigen::MatrixXcd& value);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const LaurentSeries& operator()(int i, int j) const {
    return entries_[static_cast<size_t>(i * cols_ + j)];
  }
  const std::vector<LaurentSeries>& entries() const { return entries_; }

  /// Common support bound: the largest support bound over all entries.
  int support_bound() const { return support_bound_; }

  /// Union of offsets stored in any entry.
  std::set<int> Offsets() const;

  /// The rows × cols coefficient matrix M_k.
  Eigen::MatrixXcd Coefficient(int k) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<LaurentSeries> entries_;
  int support_bound_ = 0;
};

/// Entrywise Gelfand evaluation at z = e^{iθ}.
Eigen::MatrixXcd MatrixEval(const LaurentMatrix& m, double theta);

/// M⋆ with (M⋆)_{ij} = (m_{ji})⋆.
LaurentMatrix MatrixInvolute(const LaurentMatrix& m, InvolutionKind kind);

/// Throws DimensionMismatch if m.cols() != n.rows().
LaurentMatrix MatrixMultiply(const LaurentMatrix& m, const LaurentMatrix& n);
LaurentMatrix MatrixAdd(const LaurentMatrix& m, const LaurentMatrix& n);
LaurentMatrix MatrixSubtract(const LaurentMatrix& m, const LaurentMatrix& n);

/// Operator norm on (R^cols → R^rows) with the max norm on R^n: the largest
/// row sum of entry Wiener norms. Submultiplicative.
double MatrixWienerNorm(const LaurentMatrix& m, const WeightSequence& w);

inline LaurentMatrix operator*(const LaurentMatrix& m, const LaurentMatrix& n) {
  return MatrixMultiply(m, n);
}
inline LaurentMatrix operator+(const LaurentMatrix& m, const LaurentMatrix& n) {
  return MatrixAdd(m, n);
}
inline LaurentMatrix operator-(const LaurentMatrix& m, const LaurentMatrix& n) {
  return MatrixSubtract(m, n);
}

}  // namespace algebra
}  // namespace rb
