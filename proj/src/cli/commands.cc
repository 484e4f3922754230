#include "rb/cli/commands.h"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>

#include "rb/care/care.h"
#include "rb/cli/problem.h"
#include "rb/field/assumptions.h"
#include "rb/field/decay.h"
#include "rb/field/field.h"
#include "rb/io/json.h"
#include "rb/io/serialize.h"
#include "rb/spatial/spatial.h"

namespace rb {
namespace cli {

using algebra::InvolutionKind;
using algebra::LaurentMatrix;
using algebra::LaurentSeries;
using io::Json;

namespace {

field::FieldOptions OptionsFor(const ProblemFile& problem) {
  field::FieldOptions options;
  options.tol = problem.tol;
  options.tol_stab = problem.tol_stab;
  options.threads = ThreadsFromEnv();
  return options;
}

// Levels down to K = N_i/4 = 64, at least three.
int LevelCount(int N) {
  const int log2n = static_cast<int>(std::lround(std::log2(N)));
  return std::max(3, log2n - 7);
}

// The regular solve: fixed grid if requested, otherwise refine from n0 until
// the continuity target holds.
field::FieldSolution Solve(const ProblemFile& problem, std::optional<int> grid,
                           const field::FieldOptions& options) {
  if (grid) {
    return field::SolveField(problem.A, problem.B, problem.C, problem.involution,
                             field::SampleGrid(*grid), options);
  }
  double target = 0.0;
  if (problem.continuity_target) {
    target = *problem.continuity_target;
  } else {
    const field::FieldSolution coarse =
        field::SolveField(problem.A, problem.B, problem.C, problem.involution,
                          field::SampleGrid(problem.n0), options);
    target = field::DefaultContinuityTarget(coarse, problem.n_max);
    if (coarse.continuity_modulus <= target) return coarse;
  }
  return field::RefineUntilContinuous(problem.A, problem.B, problem.C,
                                      problem.involution, problem.n0,
                                      problem.n_max, target, options);
}

field::FieldSolution SolveForced(const ProblemFile& problem, std::optional<int> grid,
                                 const field::FieldOptions& options) {
  return field::SolveFieldForced(problem.A, problem.B, problem.C, problem.involution,
                                 field::SampleGrid(grid.value_or(problem.n_max)),
                                 options);
}

void WarnNonConforming(std::ostream& err) {
  err << "warning: --force-pointwise skips the hypothesis checks; the result "
         "is NON-CONFORMING and not a solution of the algebra equation\n";
}

void WriteSolution(const field::FieldSolution& solution, const SolveOptions& options,
                   std::ostream& out) {
  const Json j = io::ToJson(solution);
  if (!options.out_path) {
    out << io::Dump(j);
    return;
  }
  std::ofstream file(*options.out_path, std::ios::binary);
  if (!file) throw InputError(*options.out_path + ": cannot write file");
  file << io::Dump(j);
  Json summary;
  summary["solution"] = *options.out_path;
  summary["grid_size"] = solution.grid.size();
  summary["non_conforming"] = solution.forced;
  summary["residual_max"] = solution.residual_max;
  summary["continuity_modulus"] = solution.continuity_modulus;
  summary["aliasing_estimate"] = solution.aliasing_estimate;
  summary["abscissa"] = solution.stability.abscissa;
  out << io::Dump(summary);
}

Json ViolationJson(const field::AssumptionViolation& e) {
  Json j;
  j["error"] = "assumption_violation";
  j["assumptions"] = io::ToJson(e.report());
  return j;
}

LaurentMatrix Scalar(std::map<int, algebra::Complex> coefficients) {
  return LaurentMatrix::Scalar(LaurentSeries(std::move(coefficients)));
}

double CorrectedClosedForm(double theta) {
  const double c = 2.0 * std::cos(theta);
  return c + std::sqrt(c * c + 1.0);
}

double SecondClosedForm(double theta) {
  const double c = std::cos(theta);
  return c + std::sqrt(c * c + 1.0);
}

double MaxScalarError(const field::FieldSolution& solution, double (*closed)(double)) {
  double worst = 0.0;
  for (int j = 0; j < solution.grid.size(); ++j) {
    worst = std::max(worst, std::abs(solution.pi_samples[j](0, 0) -
                                     closed(solution.grid.theta(j))));
  }
  return worst;
}

void PrintSums(std::ostream& err, const char* label,
               const std::vector<std::pair<int, double>>& sums) {
  err << label << "\n";
  for (const auto& [K, S] : sums) err << "  K = " << K << "  S = " << S << "\n";
}

int DemoCorrected(std::ostream& out, std::ostream& err) {
  const LaurentMatrix A = Scalar({{-1, 1.0}, {1, 1.0}});
  const LaurentMatrix one = Scalar({{0, 1.0}});
  field::FieldOptions options;
  options.threads = ThreadsFromEnv();
  const auto solution = field::SolveField(A, one, one, InvolutionKind::kCoeffConjugate,
                                          field::SampleGrid(512), options);
  const double error = MaxScalarError(solution, CorrectedClosedForm);
  const auto decay = field::CertifyDecay(field::SubsampleLevels(solution.pi_samples, 4),
                                         algebra::WeightSequence::Unit(), true);
  err << "corrected example: A = z + 1/z, B = C = 1, coeff_conjugate, N = 512\n"
      << "  max |Pi(theta) - (2cos + sqrt(4cos^2 + 1))| = " << error << "\n"
      << "  closed-loop abscissa = " << solution.stability.abscissa
      << " at theta = " << solution.stability.worst_theta << "\n"
      << "  p_0 = " << solution.P(0, 0).coefficient(0).real() << "\n"
      << "  decay verdict: " << field::ToString(decay.verdict) << "\n";
  Json j;
  j["demo"] = "corrected";
  j["grid_size"] = solution.grid.size();
  j["max_closed_form_error"] = error;
  j["residual_max"] = solution.residual_max;
  j["stability"] = io::ToJson(solution.stability);
  j["decay"] = io::ToJson(decay);
  out << io::Dump(j);
  return kExitOk;
}

int DemoSecondInvolution(std::ostream& out, std::ostream& err) {
  const LaurentMatrix A = Scalar({{1, 1.0}});
  const LaurentMatrix one = Scalar({{0, 1.0}});
  field::FieldOptions options;
  options.threads = ThreadsFromEnv();
  const auto solution = field::SolveField(A, one, one, InvolutionKind::kHermitianOnCircle,
                                          field::SampleGrid(256), options);
  const double error = MaxScalarError(solution, SecondClosedForm);
  err << "second involution: A = z, B = C = 1, hermitian_on_circle, N = 256\n"
      << "  max |Pi(theta) - (cos + sqrt(cos^2 + 1))| = " << error << "\n"
      << "  closed-loop abscissa = " << solution.stability.abscissa << "\n";
  Json j;
  j["demo"] = "second_involution";
  j["grid_size"] = solution.grid.size();
  j["max_closed_form_error"] = error;
  j["residual_max"] = solution.residual_max;
  j["stability"] = io::ToJson(solution.stability);
  out << io::Dump(j);
  return kExitOk;
}

int DemoCounterexample(std::ostream& out, std::ostream& err) {
  const LaurentMatrix A = Scalar({{1, 1.0}});
  const LaurentMatrix one = Scalar({{0, 1.0}});
  const auto kind = InvolutionKind::kCoeffConjugate;
  const field::SampleGrid check_grid(16);
  const auto report = field::CheckAssumptions(A, one, one, kind, check_grid, 1e-10);
  const LaurentMatrix a_star = algebra::MatrixInvolute(A, kind);
  Json curve = Json::array();
  err << "counterexample: A = z, B = C = 1, coeff_conjugate\n"
      << "  A1 defect |(A*)^(theta) - conj(A^(theta))|:\n";
  for (int j = 0; j < check_grid.size(); ++j) {
    const double theta = check_grid.theta(j);
    const double defect = care::SpectralNorm(algebra::MatrixEval(a_star, theta) -
                                             algebra::MatrixEval(A, theta).adjoint());
    curve.push_back(Json::array({theta, defect}));
    err << "    theta = " << theta << "  defect = " << defect << "\n";
  }

  field::FieldOptions options;
  options.threads = ThreadsFromEnv();
  const int N = 16384;
  const auto forced = field::SolveFieldForced(A, one, one, kind, field::SampleGrid(N), options);
  const auto decay = field::CertifyDecay(field::SubsampleLevels(forced.pi_samples, LevelCount(N)),
                                         algebra::WeightSequence::Unit(), true);
  WarnNonConforming(err);
  PrintSums(err, "  C1 probe partial sums of the forced pointwise solution:",
            decay.c1_probe->partial_sums);
  err << "  C1 probe verdict: " << field::ToString(decay.c1_probe->verdict) << "\n";

  Json j;
  j["demo"] = "counterexample";
  j["assumptions"] = io::ToJson(report);
  j["a1_defect_curve"] = std::move(curve);
  j["non_conforming"] = true;
  j["forced_grid_size"] = N;
  j["decay"] = io::ToJson(decay);
  out << io::Dump(j);
  return kExitOk;
}

int DemoSpatialRing(std::ostream& out, std::ostream& err) {
  const LaurentMatrix A = Scalar({{-1, 1.0}, {1, 1.0}});
  const LaurentMatrix one = Scalar({{0, 1.0}});
  const auto kind = InvolutionKind::kCoeffConjugate;
  field::FieldOptions options;
  options.threads = ThreadsFromEnv();
  const auto solution = field::SolveField(A, one, one, kind, field::SampleGrid(256), options);
  err << "spatial ring: corrected example truncated to N subsystems\n";
  Json rings = Json::array();
  for (int N : {8, 16, 32}) {
    const double abscissa = spatial::TruncatedClosedLoopAbscissa(A, one, solution.P, N, kind);
    err << "  N = " << N << "  truncated closed-loop abscissa = " << abscissa << "\n";
    Json ring;
    ring["N"] = N;
    ring["abscissa"] = abscissa;
    rings.push_back(std::move(ring));
  }
  const auto profile = spatial::GainDecayProfile(one, solution.P,
                                                 algebra::WeightSequence::Unit(), kind);
  Json gains = Json::array();
  for (const auto& row : profile.rows) {
    if (row.k >= 0 && row.k <= 32) gains.push_back(Json::array({row.k, row.norm}));
  }
  err << "  gain weighted sum (unit weight) = " << profile.weighted_sum << "\n";
  Json j;
  j["demo"] = "spatial_ring";
  j["rings"] = std::move(rings);
  j["gain_norms"] = std::move(gains);
  j["gain_weighted_sum"] = profile.weighted_sum;
  out << io::Dump(j);
  return kExitOk;
}

}  // namespace

int ThreadsFromEnv() {
  const char* value = std::getenv("RB_THREADS");
  if (value == nullptr) return 0;
  char* end = nullptr;
  const long n = std::strtol(value, &end, 10);
  if (end == value || *end != '\0' || n <= 0 || n > 4096) return 0;
  return static_cast<int>(n);
}

int CmdCheck(const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    const ProblemFile problem = LoadProblem(path);
    const auto report =
        field::CheckAssumptions(problem.A, problem.B, problem.C, problem.involution,
                                field::SampleGrid(problem.n_max), problem.tol);
    out << io::Dump(io::ToJson(report));
    if (!report.all_pass()) {
      err << path << ": assumptions fail on the sample grid\n";
      return kExitFailed;
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kExitInput;
  }
}

int CmdSolve(const std::string& path, const SolveOptions& options,
             std::ostream& out, std::ostream& err) {
  try {
    ProblemFile problem = LoadProblem(path);
    if (options.tol) problem.tol = *options.tol;
    if (options.grid && (*options.grid < 8 || !field::IsPowerOfTwo(*options.grid))) {
      throw InputError("--grid must be a power of two >= 8");
    }
    const auto field_options = OptionsFor(problem);
    if (options.force_pointwise) {
      WarnNonConforming(err);
      WriteSolution(SolveForced(problem, options.grid, field_options), options, out);
      return kExitOk;
    }
    try {
      WriteSolution(Solve(problem, options.grid, field_options), options, out);
      return kExitOk;
    } catch (const field::TargetNotReached& e) {
      err << e.what() << "\n";
      WriteSolution(e.last(), options, out);
      return kExitTargetMissed;
    }
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kExitInput;
  } catch (const field::AssumptionViolation& e) {
    err << e.what() << "\n";
    out << io::Dump(ViolationJson(e));
    return kExitFailed;
  } catch (const field::PointwiseSolveFailure& e) {
    err << e.what() << "\n";
    return kExitPointwise;
  }
}

int CmdCertify(const std::string& path, const CertifyOptions& options,
               std::ostream& out, std::ostream& err) {
  try {
    const ProblemFile problem = LoadProblem(path);
    algebra::WeightSequence weight = problem.weight;
    if (options.weight) {
      try {
        weight = ParseWeightSpec(*options.weight);
      } catch (const std::invalid_argument& e) {
        throw InputError(std::string("--weight: ") + e.what());
      }
    }
    if (options.grid && (*options.grid < 8 || !field::IsPowerOfTwo(*options.grid))) {
      throw InputError("--grid must be a power of two >= 8");
    }

    std::vector<Eigen::MatrixXcd> samples;
    bool non_conforming = false;
    if (options.solution_path) {
      io::StoredSolution stored;
      try {
        const std::string text = ReadFile(*options.solution_path);
        Json doc;
        try {
          doc = Json::parse(text);
        } catch (const Json::parse_error& e) {
          throw InputError(*options.solution_path + ": parse error: " + e.what());
        }
        stored = io::StoredSolutionFromJson(doc);
        if (stored.grid_size < 8 || !field::IsPowerOfTwo(stored.grid_size)) {
          throw io::SchemaError("/grid_size", "grid size must be a power of two >= 8");
        }
        for (size_t j = 0; j < stored.samples.size(); ++j) {
          if (stored.samples[j].rows() != problem.n || stored.samples[j].cols() != problem.n) {
            throw io::SchemaError("/samples/" + std::to_string(j),
                                  "sample shape does not match the problem");
          }
        }
        if (stored.kind != problem.involution) {
          throw io::SchemaError("/involution", "involution differs from the problem file");
        }
      } catch (const io::SchemaError& e) {
        throw InputError(*options.solution_path + ": " + e.pointer() + ": " + e.what());
      }
      samples = std::move(stored.samples);
      non_conforming = stored.non_conforming;
    } else {
      const auto field_options = OptionsFor(problem);
      if (options.force_pointwise) {
        WarnNonConforming(err);
        samples = SolveForced(problem, options.grid, field_options).pi_samples;
        non_conforming = true;
      } else {
        try {
          samples = Solve(problem, options.grid, field_options).pi_samples;
        } catch (const field::TargetNotReached& e) {
          err << e.what() << "\n";
          samples = e.last().pi_samples;
        }
      }
    }
    if (non_conforming && !options.force_pointwise) WarnNonConforming(err);

    const int N = static_cast<int>(samples.size());
    const field::SampleGrid grid(N);
    const auto stability =
        field::CertifyStability(problem.A, problem.B, grid, samples, problem.tol_stab);
    field::DecayCertificate decay;
    try {
      decay = field::CertifyDecay(field::SubsampleLevels(samples, LevelCount(N)), weight,
                                  options.c1_probe);
    } catch (const field::InsufficientLevels& e) {
      throw InputError(std::string("decay certificate: ") + e.what());
    }

    const bool certified =
        stability.margin_pass && decay.verdict == field::DecayVerdict::kCertifiedMember;
    Json j;
    j["grid_size"] = N;
    j["involution"] = algebra::ToString(problem.involution);
    j["non_conforming"] = non_conforming;
    if (non_conforming) j["warning"] = "NON-CONFORMING: samples were not checked against the hypotheses";
    j["stability"] = io::ToJson(stability);
    j["decay"] = io::ToJson(decay);
    j["certified"] = certified;
    out << io::Dump(j);

    err << "abscissa = " << stability.abscissa
        << (stability.margin_pass ? " (margin ok)" : " (margin FAILED)")
        << ", decay verdict = " << field::ToString(decay.verdict) << "\n";
    if (decay.verdict == field::DecayVerdict::kDiverging) return kExitDiverging;
    return certified ? kExitOk : kExitFailed;
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kExitInput;
  } catch (const field::AssumptionViolation& e) {
    err << e.what() << "\n";
    out << io::Dump(ViolationJson(e));
    return kExitFailed;
  } catch (const field::PointwiseSolveFailure& e) {
    err << e.what() << "\n";
    return kExitPointwise;
  }
}

int CmdDemo(const std::string& name, std::ostream& out, std::ostream& err) {
  if (name == "corrected") return DemoCorrected(out, err);
  if (name == "second_involution") return DemoSecondInvolution(out, err);
  if (name == "counterexample") return DemoCounterexample(out, err);
  if (name == "spatial_ring") return DemoSpatialRing(out, err);
  err << "unknown demo '" << name
      << "' (expected counterexample, corrected, second_involution, spatial_ring)\n";
  return kExitInput;
}

}  // namespace cli
}  // namespace rb
