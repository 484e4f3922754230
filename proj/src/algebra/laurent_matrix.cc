#include "rb/algebra/laurent_matrix.h"

#include <algorithm>
#include <string>

namespace rb {
namespace algebra {

LaurentMatrix::LaurentMatrix(int rows, int cols)
    : LaurentMatrix(rows, cols,
                    std::vector<LaurentSeries>(
                        static_cast<size_t>(std::max(rows, 0) * std::max(cols, 0)))) {}

LaurentMatrix::LaurentMatrix(int rows, int cols,
                             std::vector<LaurentSeries> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0 ||
      entries_.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
    throw DimensionMismatch("LaurentMatrix: " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " needs that many entries, got " +
                            std::to_string(entries_.size()));
  }
  for (const auto& entry : entries_) {
    support_bound_ = std::max(support_bound_, entry.support_bound());
  }
}

LaurentMatrix LaurentMatrix::FromCoefficients(
    int rows, int cols, const std::map<int, Eigen::MatrixXcd>& coefficients) {
  std::vector<std::map<int, Complex>> maps(static_cast<size_t>(rows * cols));
  for (const auto& [k, block] : coefficients) {
    if (block.rows() != rows || block.cols() != cols) {
      throw DimensionMismatch("coefficient block has the wrong shape");
    }
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) maps[i * cols + j].emplace(k, block(i, j));
    }
  }
  std::vector<LaurentSeries> entries;
  entries.reserve(maps.size());
  for (auto& entry : maps) entries.emplace_back(std::move(entry));
  return LaurentMatrix(rows, cols, std::move(entries));
}

LaurentMatrix LaurentMatrix::Scalar(LaurentSeries entry) {
  return LaurentMatrix(1, 1, {std::move(entry)});
}

LaurentMatrix LaurentMatrix::Constant(const Eigen::MatrixXcd& value) {
  return FromCoefficients(static_cast<int>(value.rows()),
                          static_cast<int>(value.cols()), {{0, value}});
}

std::set<int> LaurentMatrix::Offsets() const {
  std::set<int> offsets;
  for (const auto& entry : entries_) {
    for (const auto& [k, c] : entry.coefficients()) offsets.insert(k);
  }
  return offsets;
}

Eigen::MatrixXcd LaurentMatrix::Coefficient(int k) const {
  Eigen::MatrixXcd block(rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) block(i, j) = (*this)(i, j).coefficient(k);
  }
  return block;
}

Eigen::MatrixXcd MatrixEval(const LaurentMatrix& m, double theta) {
  Eigen::MatrixXcd value(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) value(i, j) = GelfandEval(m(i, j), theta);
  }
  return value;
}

LaurentMatrix MatrixInvolute(const LaurentMatrix& m, InvolutionKind kind) {
  std::vector<LaurentSeries> entries;
  entries.reserve(m.entries().size());
  for (int i = 0; i < m.cols(); ++i) {
    for (int j = 0; j < m.rows(); ++j) entries.push_back(Involute(m(j, i), kind));
  }
  return LaurentMatrix(m.cols(), m.rows(), std::move(entries));
}

LaurentMatrix MatrixMultiply(const LaurentMatrix& m, const LaurentMatrix& n) {
  if (m.cols() != n.rows()) {
    throw DimensionMismatch("MatrixMultiply: " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + " times " +
                            std::to_string(n.rows()) + "x" +
                            std::to_string(n.cols()));
  }
  std::vector<LaurentSeries> entries;
  entries.reserve(static_cast<size_t>(m.rows() * n.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < n.cols(); ++j) {
      // Accumulate raw convolutions, prune once at the end.
      std::map<int, Complex> sum;
      for (int l = 0; l < m.cols(); ++l) {
        for (const auto& [a, x] : m(i, l).coefficients()) {
          for (const auto& [b, y] : n(l, j).coefficients()) sum[a + b] += x * y;
        }
      }
      entries.push_back(LaurentSeries(std::move(sum)).Pruned(kPruneThreshold));
    }
  }
  return LaurentMatrix(m.rows(), n.cols(), std::move(entries));
}

namespace {

template <typename Op>
LaurentMatrix Entrywise(const LaurentMatrix& m, const LaurentMatrix& n, Op op,
                        const char* name) {
  if (m.rows() != n.rows() || m.cols() != n.cols()) {
    throw DimensionMismatch(std::string(name) + ": shapes differ");
  }
  std::vector<LaurentSeries> entries;
  entries.reserve(m.entries().size());
  for (size_t i = 0; i < m.entries().size(); ++i) {
    entries.push_back(op(m.entries()[i], n.entries()[i]));
  }
  return LaurentMatrix(m.rows(), m.cols(), std::move(entries));
}

}  // namespace

LaurentMatrix MatrixAdd(const LaurentMatrix& m, const LaurentMatrix& n) {
  return Entrywise(m, n, Add, "MatrixAdd");
}

LaurentMatrix MatrixSubtract(const LaurentMatrix& m, const LaurentMatrix& n) {
  return Entrywise(m, n, Subtract, "MatrixSubtract");
}

double MatrixWienerNorm(const LaurentMatrix& m, const WeightSequence& w) {
  double largest = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    double row = 0.0;
    for (int j = 0; j < m.cols(); ++j) row += WienerNorm(m(i, j), w);
    largest = std::max(largest, row);
  }
  return largest;
}

}  // namespace algebra
}  // namespace rb
