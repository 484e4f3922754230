#include "rb/cli/problem.h"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rb/field/grid.h"
#include "rb/io/json.h"
#include "rb/io/serialize.h"

namespace rb {
namespace cli {

using algebra::WeightSequence;
using io::Json;
using io::SchemaError;

namespace {

// 1-based line and column of byte offset `pos`.
std::pair<int, int> LineColumn(std::string_view text, size_t pos) {
  int line = 1;
  int col = 1;
  for (size_t i = 0; i < pos && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

WeightSequence WeightFromJson(const Json& value) {
  io::RequireObject(value, "/weight", {"kind", "s", "a", "b"});
  const std::string kind =
      io::RequireString(io::RequireMember(value, "/weight", "kind"), "/weight/kind");
  auto forbid = [&](const char* key) {
    if (value.contains(key)) {
      throw SchemaError(std::string("/weight/") + key,
                        "parameter '" + std::string(key) + "' not used by kind '" + kind + "'");
    }
  };
  try {
    if (kind == "unit") {
      forbid("s");
      forbid("a");
      forbid("b");
      return WeightSequence::Unit();
    }
    if (kind == "polynomial") {
      forbid("a");
      forbid("b");
      return WeightSequence::Polynomial(
          io::RequireNumber(io::RequireMember(value, "/weight", "s"), "/weight/s"));
    }
    if (kind == "subexponential") {
      forbid("s");
      return WeightSequence::Subexponential(
          io::RequireNumber(io::RequireMember(value, "/weight", "a"), "/weight/a"),
          io::RequireNumber(io::RequireMember(value, "/weight", "b"), "/weight/b"));
    }
  } catch (const std::invalid_argument& e) {
    throw SchemaError("/weight", e.what());
  }
  throw SchemaError("/weight/kind", "unknown weight kind '" + kind + "'");
}

int GridSize(const Json& value, const std::string& pointer) {
  const int N = io::RequireInt(value, pointer);
  if (N < 8 || !field::IsPowerOfTwo(N)) {
    throw SchemaError(pointer, "grid size must be a power of two >= 8");
  }
  return N;
}

double PositiveNumber(const Json& value, const std::string& pointer) {
  const double x = io::RequireNumber(value, pointer);
  if (!(x > 0.0)) throw SchemaError(pointer, "must be positive");
  return x;
}

void CheckShape(const algebra::LaurentMatrix& M, int rows, int cols,
                const char* pointer) {
  if (M.rows() != rows || M.cols() != cols) {
    throw SchemaError(pointer, "expected " + std::to_string(rows) + "x" +
                                   std::to_string(cols) + ", got " +
                                   std::to_string(M.rows()) + "x" +
                                   std::to_string(M.cols()));
  }
}

ProblemFile FromJson(const Json& doc) {
  io::RequireObject(doc, "", {"n", "m", "p", "A", "B", "C", "involution", "weight",
                              "grid", "tolerances"});
  ProblemFile problem;
  auto dimension = [&](const char* key) {
    const std::string pointer = std::string("/") + key;
    const int d = io::RequireInt(io::RequireMember(doc, "", key), pointer);
    if (d <= 0) throw SchemaError(pointer, "dimension must be positive");
    return d;
  };
  problem.n = dimension("n");
  problem.m = dimension("m");
  problem.p = dimension("p");
  problem.A = io::LaurentMatrixFromJson(io::RequireMember(doc, "", "A"), "/A");
  problem.B = io::LaurentMatrixFromJson(io::RequireMember(doc, "", "B"), "/B");
  problem.C = io::LaurentMatrixFromJson(io::RequireMember(doc, "", "C"), "/C");
  CheckShape(problem.A, problem.n, problem.n, "/A");
  CheckShape(problem.B, problem.n, problem.m, "/B");
  CheckShape(problem.C, problem.p, problem.n, "/C");

  try {
    problem.involution = algebra::ParseInvolutionKind(
        io::RequireString(io::RequireMember(doc, "", "involution"), "/involution"));
  } catch (const std::invalid_argument& e) {
    throw SchemaError("/involution", e.what());
  }

  if (doc.contains("weight")) problem.weight = WeightFromJson(doc["weight"]);

  if (doc.contains("grid")) {
    const Json& grid = doc["grid"];
    io::RequireObject(grid, "/grid", {"n0", "n_max"});
    if (grid.contains("n0")) problem.n0 = GridSize(grid["n0"], "/grid/n0");
    if (grid.contains("n_max")) problem.n_max = GridSize(grid["n_max"], "/grid/n_max");
    if (problem.n0 > problem.n_max) {
      throw SchemaError("/grid", "n0 must not exceed n_max");
    }
  }

  if (doc.contains("tolerances")) {
    const Json& tols = doc["tolerances"];
    io::RequireObject(tols, "/tolerances", {"tol", "tol_stab", "continuity_target"});
    if (tols.contains("tol")) {
      problem.tol = PositiveNumber(tols["tol"], "/tolerances/tol");
    }
    if (tols.contains("tol_stab")) {
      problem.tol_stab = PositiveNumber(tols["tol_stab"], "/tolerances/tol_stab");
    }
    if (tols.contains("continuity_target")) {
      problem.continuity_target =
          PositiveNumber(tols["continuity_target"], "/tolerances/continuity_target");
    }
  }
  return problem;
}

}  // namespace

ProblemFile ParseProblem(std::string_view text, const std::string& name) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // byte is 1-based and points just past the offending character.
    const size_t pos = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, col] = LineColumn(text, pos);
    std::ostringstream msg;
    msg << name << ":" << line << ":" << col << ": parse error: " << e.what();
    throw InputError(msg.str());
  }
  try {
    return FromJson(doc);
  } catch (const SchemaError& e) {
    const int line = io::LineFor(io::LocateLines(text), e.pointer());
    std::ostringstream msg;
    msg << name << ":" << line << ": " << (e.pointer().empty() ? "/" : e.pointer())
        << ": " << e.what();
    throw InputError(msg.str());
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ProblemFile LoadProblem(const std::string& path) {
  return ParseProblem(ReadFile(path), path);
}

WeightSequence ParseWeightSpec(const std::string& spec) {
  auto number = [&](const std::string& s) {
    if (s.empty()) throw std::invalid_argument("bad weight spec '" + spec + "'");
    char* end = nullptr;
    errno = 0;
    const double x = std::strtod(s.c_str(), &end);
    if (*end != '\0' || errno != 0) {
      throw std::invalid_argument("bad weight spec '" + spec + "'");
    }
    return x;
  };
  if (spec == "unit") return WeightSequence::Unit();
  if (spec.rfind("poly:", 0) == 0) return WeightSequence::Polynomial(number(spec.substr(5)));
  if (spec.rfind("subexp:", 0) == 0) {
    const std::string params = spec.substr(7);
    const size_t comma = params.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("bad weight spec '" + spec + "'");
    }
    return WeightSequence::Subexponential(number(params.substr(0, comma)),
                                          number(params.substr(comma + 1)));
  }
  throw std::invalid_argument("bad weight spec '" + spec + "'");
}

}  // namespace cli
}  // namespace rb
