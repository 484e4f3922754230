#pragma once

#include <vector>

namespace rb {
namespace field {

/// N equispaced characters θ_j = 2πj/N of the circle, N a power of two ≥ 8.
class SampleGrid {
 public:
  /// Throws std::invalid_argument for N < 8 or N not a power of two.
  explicit SampleGrid(int N);

  int size() const { return N_; }
  double theta(int j) const;
  std::vector<double> thetas() const;

 private:
  int N_;
};

bool IsPowerOfTwo(long long n);

}  // namespace field
}  // namespace rb
