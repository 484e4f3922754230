#pragma once

#include <functional>

#include <Eigen/Dense>

namespace rb {
namespace care {

/// A complex Schur factorization M = U T U^H whose diagonal has been
/// reordered so that the `leading` selected eigenvalues come first.
struct OrderedSchur {
  Eigen::MatrixXcd T;
  Eigen::MatrixXcd U;
  int leading = 0;
};

/// Moves every diagonal entry of the Schur form satisfying `select` to the
/// top-left, preserving relative order, by adjacent Givens swaps.
OrderedSchur OrderedComplexSchur(
    const Eigen::MatrixXcd& m,
    const std::function<bool(std::complex<double>)>& select);

/// Same, selecting the `count` eigenvalues with smallest real part (ties
/// broken by Schur position).
OrderedSchur OrderedComplexSchurLeftmost(const Eigen::MatrixXcd& m, int count);

}  // namespace care
}  // namespace rb
