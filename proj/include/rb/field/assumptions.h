#pragma once

#include <stdexcept>
#include <string>

#include "rb/algebra/laurent_matrix.h"
#include "rb/field/grid.h"

namespace rb {
namespace field {

struct AssumptionCheck {
  bool pass = true;
  double worst_theta = 0.0;
  double worst_defect = 0.0;
};

/// Grid-sampled verdicts for the five hypotheses of the existence theorem:
///   a1  (A⋆)^ = Â^H          a2  (BB⋆)^ = B̂ B̂^H      a3  (C⋆C)^ = Ĉ^H Ĉ
///   a4  (Â, B̂) stabilizable  a5  (Â, Ĉ) detectable
/// a1–a3 carry the worst spectral-norm defect; a4/a5 carry a 0/1 failure
/// indicator and the first failing angle. a4/a5 are only checked at grid
/// points, so a failure between samples surfaces later as an ill-conditioned
/// pointwise solve or a refinement that cannot reach its continuity target.
struct AssumptionReport {
  AssumptionCheck a1, a2, a3, a4, a5;
  int grid_size = 0;

  bool all_pass() const {
    return a1.pass && a2.pass && a3.pass && a4.pass && a5.pass;
  }
};

AssumptionReport CheckAssumptions(const algebra::LaurentMatrix& A,
                                  const algebra::LaurentMatrix& B,
                                  const algebra::LaurentMatrix& C,
                                  algebra::InvolutionKind kind,
                                  const SampleGrid& grid, double tol);

class AssumptionViolation : public std::runtime_error {
 public:
  explicit AssumptionViolation(AssumptionReport report);
  const AssumptionReport& report() const { return report_; }

 private:
  AssumptionReport report_;
};

/// Throws DimensionMismatch unless A is n×n, B is n×m and C is p×n.
void ValidateShapes(const algebra::LaurentMatrix& A,
                    const algebra::LaurentMatrix& B,
                    const algebra::LaurentMatrix& C);

}  // namespace field
}  // namespace rb
