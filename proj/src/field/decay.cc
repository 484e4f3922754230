#include "rb/field/decay.h"

#include <algorithm>
#include <cmath>

#include "rb/field/grid.h"
#include "rb/field/recovery.h"

namespace rb {
namespace field {

std::string ToString(DecayVerdict verdict) {
  switch (verdict) {
    case DecayVerdict::kCertifiedMember:
      return "certified_member";
    case DecayVerdict::kDiverging:
      return "diverging";
    case DecayVerdict::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

namespace {

PartialSumSeries SumSeries(const RecoveredCoefficients& finest,
                           const std::vector<int>& level_sizes,
                           const algebra::WeightSequence& weight,
                           double aliasing_estimate) {
  PartialSumSeries series;
  // Sums stop at K = N_i/4 so the finest level's top octave, where aliased
  // mass accumulates, never enters.
  auto mass = [&](int k) { return weight(k) * finest.bin(k).cwiseAbs().sum(); };
  for (int size : level_sizes) {
    const int K = size / 4;
    double total = 0.0;
    for (int k = -K; k <= K; ++k) total += mass(k);
    series.partial_sums.emplace_back(K, total);
  }

  const size_t count = series.partial_sums.size();
  const double last = series.partial_sums[count - 1].second;
  const double prev = series.partial_sums[count - 2].second;
  series.relative_growth = last == 0.0 ? 0.0 : (last - prev) / last;
  series.tail_ratio = prev == 0.0 ? 1.0 : last / prev;

  bool increasing = true;
  for (size_t i = 1; i < count; ++i) {
    if (!(series.partial_sums[i].second > series.partial_sums[i - 1].second)) {
      increasing = false;
    }
  }
  const double last_increment = last - prev;
  const double prev_increment = prev - series.partial_sums[count - 3].second;

  if (series.relative_growth < kCertifyRelativeGrowth &&
      aliasing_estimate < kCertifyAliasing) {
    series.verdict = DecayVerdict::kCertifiedMember;
  } else if (increasing && series.relative_growth >= kCertifyRelativeGrowth &&
             last_increment >= prev_increment) {
    series.verdict = DecayVerdict::kDiverging;
  } else {
    series.verdict = DecayVerdict::kInconclusive;
  }
  return series;
}

}  // namespace

DecayCertificate CertifyDecay(const std::vector<std::vector<Eigen::MatrixXcd>>& levels,
                              const algebra::WeightSequence& weight,
                              bool plus_c1_probe) {
  if (levels.size() < 3) {
    throw InsufficientLevels("decay certificate needs at least three doubling levels, got " +
                             std::to_string(levels.size()));
  }
  std::vector<int> sizes;
  for (size_t i = 0; i < levels.size(); ++i) {
    const int N = static_cast<int>(levels[i].size());
    if (i > 0 && N != 2 * sizes.back()) {
      throw std::invalid_argument("decay levels must double in size");
    }
    sizes.push_back(N);
  }

  const RecoveredCoefficients finest = RecoverCoefficients(levels.back());
  const RecoveredCoefficients previous = RecoverCoefficients(levels[levels.size() - 2]);

  DecayCertificate cert;
  cert.weight = weight;
  cert.aliasing_estimate = finest.aliasing_estimate;
  for (int k = -(previous.N / 2 - 1); k <= previous.N / 2 - 1; ++k) {
    cert.level_drift = std::max(
        cert.level_drift, (finest.bin(k) - previous.bin(k)).cwiseAbs().maxCoeff());
  }

  const PartialSumSeries weighted = SumSeries(finest, sizes, weight, cert.aliasing_estimate);
  cert.partial_sums = weighted.partial_sums;
  cert.relative_growth = weighted.relative_growth;
  cert.tail_ratio = weighted.tail_ratio;
  cert.weighted_verdict = weighted.verdict;
  cert.verdict = weighted.verdict;

  if (plus_c1_probe) {
    cert.c1_probe = SumSeries(finest, sizes, algebra::WeightSequence::Polynomial(1.0),
                              cert.aliasing_estimate);
    const DecayVerdict probe = cert.c1_probe->verdict;
    if (weighted.verdict == DecayVerdict::kDiverging || probe == DecayVerdict::kDiverging) {
      cert.verdict = DecayVerdict::kDiverging;
    } else if (weighted.verdict == DecayVerdict::kCertifiedMember &&
               probe == DecayVerdict::kCertifiedMember) {
      cert.verdict = DecayVerdict::kCertifiedMember;
    } else {
      cert.verdict = DecayVerdict::kInconclusive;
    }
  }
  return cert;
}

std::vector<std::vector<Eigen::MatrixXcd>> SubsampleLevels(
    const std::vector<Eigen::MatrixXcd>& finest, int count) {
  const int N = static_cast<int>(finest.size());
  if (count < 1 || !IsPowerOfTwo(N) || (N >> (count - 1)) < 8) {
    throw InsufficientLevels("cannot form " + std::to_string(count) +
                             " doubling levels of at least 8 samples from N = " +
                             std::to_string(N));
  }
  std::vector<std::vector<Eigen::MatrixXcd>> levels;
  for (int i = count - 1; i >= 0; --i) {
    const int stride = 1 << i;
    std::vector<Eigen::MatrixXcd> level;
    for (int j = 0; j < N; j += stride) level.push_back(finest[static_cast<size_t>(j)]);
    levels.push_back(std::move(level));
  }
  return levels;
}

}  // namespace field
}  // namespace rb
