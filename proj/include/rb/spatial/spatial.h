#pragma once

#include <iosfwd>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rb/algebra/laurent_matrix.h"

namespace rb {
namespace spatial {

class SupportTooWide : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Block-circulant ring of N subsystems: block (i, j) is M_{(j−i) mod N}, so
/// conjugating by the block DFT gives the blocks M̂(2πl/N).
/// Requires N > 2 · support bound (no two offsets share a residue); throws
/// SupportTooWide otherwise.
Eigen::MatrixXcd CirculantTruncate(const algebra::LaurentMatrix& m, int N);

/// Same layout with offsets folded mod N: block r is Σ_q M_{r+qN}. This is
/// the exact restriction of the spatially invariant operator to N-periodic
/// states, and agrees with CirculantTruncate whenever the latter applies.
Eigen::MatrixXcd CirculantPeriodize(const algebra::LaurentMatrix& m, int N);

/// Ring of N subsystems under the feedback u = −K x with K = B⋆ P.
struct CirculantSystem {
  int N = 0;
  Eigen::MatrixXcd block_a;  // truncated, nN × nN
  Eigen::MatrixXcd block_b;  // truncated, nN × mN
  Eigen::MatrixXcd block_k;  // periodized, mN × nN

  Eigen::MatrixXcd ClosedLoop() const { return block_a - block_b * block_k; }
};

/// A and B must satisfy the truncation precondition; the gain K = B⋆P is
/// periodized since a recovered P carries a long, decaying tail.
CirculantSystem BuildCirculantSystem(const algebra::LaurentMatrix& A,
                                     const algebra::LaurentMatrix& B,
                                     const algebra::LaurentMatrix& P, int N,
                                     algebra::InvolutionKind kind);

/// max Re σ(blockA − blockB · blockK).
double TruncatedClosedLoopAbscissa(const algebra::LaurentMatrix& A,
                                   const algebra::LaurentMatrix& B,
                                   const algebra::LaurentMatrix& P, int N,
                                   algebra::InvolutionKind kind);

struct GainRow {
  int k = 0;
  double norm = 0.0;      // ‖K_k‖₂
  double weighted = 0.0;  // α_k ‖K_k‖₂
};

struct GainProfile {
  std::vector<GainRow> rows;  // ascending k
  double weighted_sum = 0.0;  // Σ α_k ‖K_k‖₂
};

GainProfile GainDecayProfile(const algebra::LaurentMatrix& B,
                             const algebra::LaurentMatrix& P,
                             const algebra::WeightSequence& weight,
                             algebra::InvolutionKind kind);

/// Integrates ẋ = (blockA − blockB · blockK) x with classical RK4 and returns
/// (t, ‖x(t)‖₂) at every step, starting with t = 0. The step is shrunk to
/// t_final / ceil(t_final / dt) so the last sample lands on t_final.
std::vector<std::pair<double, double>> SimulateClosedLoop(
    const algebra::LaurentMatrix& A, const algebra::LaurentMatrix& B,
    const algebra::LaurentMatrix& P, int N, const Eigen::VectorXcd& x0,
    double t_final, double dt, algebra::InvolutionKind kind);

/// CSV rows `t,norm`.
void WriteSimulationCsv(std::ostream& out,
                        const std::vector<std::pair<double, double>>& trace);
/// CSV rows `k,norm,weighted`.
void WriteGainProfileCsv(std::ostream& out, const GainProfile& profile);

}  // namespace spatial
}  // namespace rb
