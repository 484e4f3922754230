#pragma once

#include <initializer_list>
#include <string>

#include <Eigen/Dense>

#include "rb/algebra/laurent_matrix.h"
#include "rb/field/assumptions.h"
#include "rb/field/decay.h"
#include "rb/field/field.h"
#include "rb/io/json.h"

namespace rb {
namespace io {

// Series:   {"k": [[offset, re, im], ...]}
// Matrix:   {"rows": p, "cols": m, "entries": [[series, ...], ...]}
// Complex:  [[[re, im], ...], ...] row-major
Json ToJson(const algebra::LaurentSeries& f);
Json ToJson(const algebra::LaurentMatrix& m);
Json ComplexMatrixToJson(const Eigen::MatrixXcd& m);

/// All readers throw SchemaError naming the offending pointer; `pointer` is
/// the location of `value` inside its enclosing document.
algebra::LaurentSeries LaurentSeriesFromJson(const Json& value,
                                             const std::string& pointer = "");
algebra::LaurentMatrix LaurentMatrixFromJson(const Json& value,
                                             const std::string& pointer = "");
Eigen::MatrixXcd ComplexMatrixFromJson(const Json& value,
                                       const std::string& pointer = "");

Json ToJson(const field::AssumptionReport& report);
Json ToJson(const field::StabilityCertificate& cert);
Json ToJson(const field::DecayCertificate& cert);
Json ToJson(const field::FieldSolution& solution);

/// The pieces of a serialized FieldSolution needed to certify it again.
struct StoredSolution {
  int grid_size = 0;
  algebra::InvolutionKind kind = algebra::InvolutionKind::kCoeffConjugate;
  bool non_conforming = false;
  std::vector<Eigen::MatrixXcd> samples;
};

StoredSolution StoredSolutionFromJson(const Json& value);

// Schema helpers shared with the problem-file reader.
void RequireObject(const Json& value, const std::string& pointer,
                   std::initializer_list<const char*> allowed);
const Json& RequireMember(const Json& object, const std::string& pointer,
                          const char* key);
int RequireInt(const Json& value, const std::string& pointer);
double RequireNumber(const Json& value, const std::string& pointer);
std::string RequireString(const Json& value, const std::string& pointer);
bool RequireBool(const Json& value, const std::string& pointer);

}  // namespace io
}  // namespace rb
