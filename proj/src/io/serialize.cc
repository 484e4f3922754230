#include "rb/io/serialize.h"

#include <cmath>
#include <limits>
#include <map>
#include <set>

namespace rb {
namespace io {

using algebra::Complex;
using algebra::LaurentMatrix;
using algebra::LaurentSeries;

namespace {

std::string Child(const std::string& pointer, const std::string& key) {
  return pointer + "/" + PointerEscape(key);
}

std::string Child(const std::string& pointer, size_t index) {
  return pointer + "/" + std::to_string(index);
}

void RequireArray(const Json& value, const std::string& pointer) {
  if (!value.is_array()) throw SchemaError(pointer, "expected an array");
}

Json CheckToJson(const field::AssumptionCheck& check) {
  Json j;
  j["pass"] = check.pass;
  j["worst_theta"] = check.worst_theta;
  j["worst_defect"] = check.worst_defect;
  return j;
}

Json SumsToJson(const std::vector<std::pair<int, double>>& sums) {
  Json out = Json::array();
  for (const auto& [K, S] : sums) out.push_back(Json::array({K, S}));
  return out;
}

}  // namespace

void RequireObject(const Json& value, const std::string& pointer,
                   std::initializer_list<const char*> allowed) {
  if (!value.is_object()) throw SchemaError(pointer, "expected an object");
  for (auto it = value.begin(); it != value.end(); ++it) {
    bool known = false;
    for (const char* key : allowed) known = known || it.key() == key;
    if (!known) {
      throw SchemaError(Child(pointer, it.key()), "unknown key '" + it.key() + "'");
    }
  }
}

const Json& RequireMember(const Json& object, const std::string& pointer,
                          const char* key) {
  const auto it = object.find(key);
  if (it == object.end()) {
    throw SchemaError(pointer, std::string("missing required key '") + key + "'");
  }
  return *it;
}

int RequireInt(const Json& value, const std::string& pointer) {
  if (value.is_number_integer() || value.is_number_unsigned()) {
    const long long v = value.get<long long>();
    if (v >= std::numeric_limits<int>::min() && v <= std::numeric_limits<int>::max()) {
      return static_cast<int>(v);
    }
  }
  throw SchemaError(pointer, "expected an integer");
}

double RequireNumber(const Json& value, const std::string& pointer) {
  if (!value.is_number()) throw SchemaError(pointer, "expected a number");
  const double v = value.get<double>();
  if (!std::isfinite(v)) throw SchemaError(pointer, "expected a finite number");
  return v;
}

std::string RequireString(const Json& value, const std::string& pointer) {
  if (!value.is_string()) throw SchemaError(pointer, "expected a string");
  return value.get<std::string>();
}

bool RequireBool(const Json& value, const std::string& pointer) {
  if (!value.is_boolean()) throw SchemaError(pointer, "expected a boolean");
  return value.get<bool>();
}

Json ToJson(const LaurentSeries& f) {
  Json terms = Json::array();
  for (const auto& [k, c] : f.coefficients()) {
    terms.push_back(Json::array({k, c.real(), c.imag()}));
  }
  Json j;
  j["k"] = std::move(terms);
  return j;
}

Json ToJson(const LaurentMatrix& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(ToJson(m(i, j)));
    entries.push_back(std::move(row));
  }
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = std::move(entries);
  return j;
}

Json ComplexMatrixToJson(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

LaurentSeries LaurentSeriesFromJson(const Json& value, const std::string& pointer) {
  RequireObject(value, pointer, {"k"});
  const std::string terms_pointer = Child(pointer, "k");
  const Json& terms = RequireMember(value, pointer, "k");
  RequireArray(terms, terms_pointer);
  std::map<int, Complex> coefficients;
  for (size_t i = 0; i < terms.size(); ++i) {
    const std::string term_pointer = Child(terms_pointer, i);
    const Json& term = terms[i];
    if (!term.is_array() || term.size() != 3) {
      throw SchemaError(term_pointer, "expected [offset, re, im]");
    }
    const int k = RequireInt(term[0], Child(term_pointer, size_t{0}));
    const double re = RequireNumber(term[1], Child(term_pointer, size_t{1}));
    const double im = RequireNumber(term[2], Child(term_pointer, size_t{2}));
    if (!coefficients.emplace(k, Complex(re, im)).second) {
      throw SchemaError(term_pointer, "duplicate offset " + std::to_string(k));
    }
  }
  return LaurentSeries(std::move(coefficients));
}

LaurentMatrix LaurentMatrixFromJson(const Json& value, const std::string& pointer) {
  RequireObject(value, pointer, {"rows", "cols", "entries"});
  const int rows = RequireInt(RequireMember(value, pointer, "rows"), Child(pointer, "rows"));
  const int cols = RequireInt(RequireMember(value, pointer, "cols"), Child(pointer, "cols"));
  if (rows <= 0 || cols <= 0) {
    throw SchemaError(pointer, "rows and cols must be positive");
  }
  const std::string entries_pointer = Child(pointer, "entries");
  const Json& entries = RequireMember(value, pointer, "entries");
  RequireArray(entries, entries_pointer);
  if (entries.size() != static_cast<size_t>(rows)) {
    throw SchemaError(entries_pointer, "expected " + std::to_string(rows) + " rows");
  }
  std::vector<LaurentSeries> flat;
  for (size_t i = 0; i < entries.size(); ++i) {
    const std::string row_pointer = Child(entries_pointer, i);
    RequireArray(entries[i], row_pointer);
    if (entries[i].size() != static_cast<size_t>(cols)) {
      throw SchemaError(row_pointer, "expected " + std::to_string(cols) + " columns");
    }
    for (size_t j = 0; j < entries[i].size(); ++j) {
      flat.push_back(LaurentSeriesFromJson(entries[i][j], Child(row_pointer, j)));
    }
  }
  return LaurentMatrix(rows, cols, std::move(flat));
}

Eigen::MatrixXcd ComplexMatrixFromJson(const Json& value, const std::string& pointer) {
  RequireArray(value, pointer);
  if (value.empty()) throw SchemaError(pointer, "empty matrix");
  const size_t rows = value.size();
  size_t cols = 0;
  Eigen::MatrixXcd m;
  for (size_t i = 0; i < rows; ++i) {
    const std::string row_pointer = Child(pointer, i);
    RequireArray(value[i], row_pointer);
    if (i == 0) {
      cols = value[i].size();
      if (cols == 0) throw SchemaError(row_pointer, "empty row");
      m.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    } else if (value[i].size() != cols) {
      throw SchemaError(row_pointer, "ragged matrix");
    }
    for (size_t j = 0; j < cols; ++j) {
      const std::string entry_pointer = Child(row_pointer, j);
      const Json& entry = value[i][j];
      if (!entry.is_array() || entry.size() != 2) {
        throw SchemaError(entry_pointer, "expected [re, im]");
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          Complex(RequireNumber(entry[0], Child(entry_pointer, size_t{0})),
                  RequireNumber(entry[1], Child(entry_pointer, size_t{1})));
    }
  }
  return m;
}

Json ToJson(const field::AssumptionReport& report) {
  Json j;
  j["grid_size"] = report.grid_size;
  j["all_pass"] = report.all_pass();
  j["a1"] = CheckToJson(report.a1);
  j["a2"] = CheckToJson(report.a2);
  j["a3"] = CheckToJson(report.a3);
  j["a4"] = CheckToJson(report.a4);
  j["a5"] = CheckToJson(report.a5);
  j["note"] = "a4 and a5 are checked at grid points only";
  return j;
}

Json ToJson(const field::StabilityCertificate& cert) {
  Json j;
  j["abscissa"] = cert.abscissa;
  j["worst_theta"] = cert.worst_theta;
  j["tol_stab"] = cert.tol_stab;
  j["margin_pass"] = cert.margin_pass;
  j["per_theta_abscissa"] = cert.per_theta;
  return j;
}

Json ToJson(const field::DecayCertificate& cert) {
  Json j;
  j["verdict"] = field::ToString(cert.verdict);
  j["weight"] = cert.weight.ToString();
  j["partial_sums"] = SumsToJson(cert.partial_sums);
  j["relative_growth"] = cert.relative_growth;
  j["tail_ratio"] = cert.tail_ratio;
  j["weighted_verdict"] = field::ToString(cert.weighted_verdict);
  j["aliasing_estimate"] = cert.aliasing_estimate;
  j["level_drift"] = cert.level_drift;
  if (cert.c1_probe) {
    Json probe;
    probe["weight"] = "poly:1";
    probe["partial_sums"] = SumsToJson(cert.c1_probe->partial_sums);
    probe["relative_growth"] = cert.c1_probe->relative_growth;
    probe["tail_ratio"] = cert.c1_probe->tail_ratio;
    probe["verdict"] = field::ToString(cert.c1_probe->verdict);
    j["c1_probe"] = std::move(probe);
  }
  return j;
}

Json ToJson(const field::FieldSolution& solution) {
  Json j;
  j["grid_size"] = solution.grid.size();
  j["involution"] = algebra::ToString(solution.kind);
  j["non_conforming"] = solution.forced;
  if (solution.forced) {
    j["warning"] =
        "NON-CONFORMING: pointwise samples computed without checking the "
        "hypotheses; this is not a certified solution";
  }
  j["residual_max"] = solution.residual_max;
  j["continuity_modulus"] = solution.continuity_modulus;
  j["aliasing_estimate"] = solution.aliasing_estimate;
  j["min_eig_min"] = solution.min_eig_min;
  j["jacobian_margin_min"] = solution.jacobian_margin_min;
  j["stability"] = ToJson(solution.stability);
  j["P"] = ToJson(solution.P);
  Json samples = Json::array();
  for (const auto& s : solution.pi_samples) samples.push_back(ComplexMatrixToJson(s));
  j["samples"] = std::move(samples);
  return j;
}

StoredSolution StoredSolutionFromJson(const Json& value) {
  if (!value.is_object()) throw SchemaError("", "expected an object");
  StoredSolution stored;
  stored.grid_size = RequireInt(RequireMember(value, "", "grid_size"), "/grid_size");
  try {
    stored.kind = algebra::ParseInvolutionKind(
        RequireString(RequireMember(value, "", "involution"), "/involution"));
  } catch (const std::invalid_argument& e) {
    throw SchemaError("/involution", e.what());
  }
  stored.non_conforming =
      RequireBool(RequireMember(value, "", "non_conforming"), "/non_conforming");
  const Json& samples = RequireMember(value, "", "samples");
  RequireArray(samples, "/samples");
  if (samples.size() != static_cast<size_t>(stored.grid_size)) {
    throw SchemaError("/samples", "sample count does not match grid_size");
  }
  for (size_t i = 0; i < samples.size(); ++i) {
    stored.samples.push_back(ComplexMatrixFromJson(samples[i], Child("/samples", i)));
  }
  return stored;
}

}  // namespace io
}  // namespace rb
