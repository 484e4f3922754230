#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rb/algebra/laurent_matrix.h"
#include "rb/algebra/weight.h"

namespace rb {
namespace cli {

/// Unreadable, malformed or schema-invalid input. The message is already
/// anchored: "file:line:col: ..." for syntax errors, "file:line: /ptr: ..."
/// for schema errors.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProblemFile {
  int n = 0;
  int m = 0;
  int p = 0;
  algebra::LaurentMatrix A;
  algebra::LaurentMatrix B;
  algebra::LaurentMatrix C;
  algebra::InvolutionKind involution = algebra::InvolutionKind::kCoeffConjugate;
  algebra::WeightSequence weight = algebra::WeightSequence::Unit();
  int n0 = 64;
  int n_max = 4096;
  double tol = 1e-10;
  double tol_stab = 1e-8;
  std::optional<double> continuity_target;
};

/// `name` only labels error messages.
ProblemFile ParseProblem(std::string_view text, const std::string& name);
ProblemFile LoadProblem(const std::string& path);

std::string ReadFile(const std::string& path);

/// "unit" | "poly:<s>" | "subexp:<a>,<b>". Throws std::invalid_argument.
algebra::WeightSequence ParseWeightSpec(const std::string& spec);

}  // namespace cli
}  // namespace rb
