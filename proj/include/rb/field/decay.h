#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rb/algebra/weight.h"

namespace rb {
namespace field {

enum class DecayVerdict { kCertifiedMember, kDiverging, kInconclusive };

std::string ToString(DecayVerdict verdict);

/// Weighted partial sums S(K) = Σ_{|k|≤K} α_k · Σ_entries |p_k| at
/// K = N_i/4 for each level N_i, all taken from the finest level's
/// coefficients so that S is nondecreasing in K.
struct PartialSumSeries {
  std::vector<std::pair<int, double>> partial_sums;
  /// (S_last − S_prev) / S_last, 0 when S_last = 0.
  double relative_growth = 0.0;
  /// S_last / S_prev, 1 when S_prev = 0.
  double tail_ratio = 1.0;
  DecayVerdict verdict = DecayVerdict::kInconclusive;
};

/// Falsifiable evidence that Σ α_k |p_k| < ∞ for the sampled P.
///
///   certified_member  relative growth over the last doubling < 1e-6 and
///                     finest-level aliasing estimate < 1e-8
///   diverging         every doubling adds a positive amount and the last
///                     increment is no smaller than the one before
///   inconclusive      otherwise
///
/// With the C¹ probe the same test also runs with α_k = 1 + |k|; the overall
/// verdict is diverging if either series diverges, certified only if both
/// certify.
struct DecayCertificate {
  algebra::WeightSequence weight = algebra::WeightSequence::Unit();
  std::vector<std::pair<int, double>> partial_sums;
  double relative_growth = 0.0;
  double tail_ratio = 1.0;
  DecayVerdict weighted_verdict = DecayVerdict::kInconclusive;
  std::optional<PartialSumSeries> c1_probe;
  double aliasing_estimate = 0.0;  // finest level, top octave
  /// max entrywise change of the retained coefficients between the last two
  /// levels.
  double level_drift = 0.0;
  DecayVerdict verdict = DecayVerdict::kInconclusive;
};

class InsufficientLevels : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kCertifyRelativeGrowth = 1e-6;
inline constexpr double kCertifyAliasing = 1e-8;

/// `levels[i]` holds the samples Π(2πj/N_i) with N_{i+1} = 2 N_i. Throws
/// InsufficientLevels for fewer than three levels.
DecayCertificate CertifyDecay(const std::vector<std::vector<Eigen::MatrixXcd>>& levels,
                              const algebra::WeightSequence& weight,
                              bool plus_c1_probe);

/// The `count` doubling levels ending at `finest`, obtained by keeping every
/// 2^r-th sample (coarser equispaced grids are subsets of the finest one).
std::vector<std::vector<Eigen::MatrixXcd>> SubsampleLevels(
    const std::vector<Eigen::MatrixXcd>& finest, int count);

}  // namespace field
}  // namespace rb
