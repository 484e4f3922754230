#include "rb/field/grid.h"

#include <numbers>
#include <stdexcept>
#include <string>

namespace rb {
namespace field {

bool IsPowerOfTwo(long long n) { return n > 0 && (n & (n - 1)) == 0; }

SampleGrid::SampleGrid(int N) : N_(N) {
  if (N < 8 || !IsPowerOfTwo(N)) {
    throw std::invalid_argument("grid size must be a power of two >= 8, got " +
                                std::to_string(N));
  }
}

double SampleGrid::theta(int j) const {
  return 2.0 * std::numbers::pi * static_cast<double>(j) / N_;
}

std::vector<double> SampleGrid::thetas() const {
  std::vector<double> out(static_cast<size_t>(N_));
  for (int j = 0; j < N_; ++j) out[static_cast<size_t>(j)] = theta(j);
  return out;
}

}  // namespace field
}  // namespace rb
