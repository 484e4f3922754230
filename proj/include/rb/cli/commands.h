#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace rb {
namespace cli {

// Exit codes shared by the subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;          // assumptions fail / not certified
inline constexpr int kExitInput = 2;           // parse, schema or usage error
inline constexpr int kExitPointwise = 3;       // pointwise solve failed
inline constexpr int kExitDiverging = 4;       // decay verdict diverging
inline constexpr int kExitTargetMissed = 5;    // continuity target not reached

struct SolveOptions {
  std::optional<std::string> out_path;
  std::optional<int> grid;
  std::optional<double> tol;
  bool force_pointwise = false;
};

struct CertifyOptions {
  std::optional<std::string> solution_path;
  std::optional<std::string> weight;
  std::optional<int> grid;
  bool c1_probe = false;
  bool force_pointwise = false;
};

/// Reports go to `out` as JSON, diagnostics to `err`.
int CmdCheck(const std::string& path, std::ostream& out, std::ostream& err);
int CmdSolve(const std::string& path, const SolveOptions& options,
             std::ostream& out, std::ostream& err);
int CmdCertify(const std::string& path, const CertifyOptions& options,
               std::ostream& out, std::ostream& err);
/// One of counterexample, corrected, second_involution, spatial_ring. The
/// human-readable summary goes to `err`, the JSON report to `out`.
int CmdDemo(const std::string& name, std::ostream& out, std::ostream& err);

/// Worker cap from RB_THREADS; 0 (hardware concurrency) when unset or invalid.
int ThreadsFromEnv();

}  // namespace cli
}  // namespace rb
