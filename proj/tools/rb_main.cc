#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rb/cli/commands.h"

int main(int argc, char** argv) {
  CLI::App app{"Riccati equations over weighted Wiener algebras of the circle"};
  app.require_subcommand(1);

  std::string path;
  auto* check = app.add_subcommand("check", "Check hypotheses A1-A5 on the sample grid");
  check->add_option("file", path, "Problem file")->required();

  rb::cli::SolveOptions solve_options;
  auto* solve = app.add_subcommand("solve", "Solve pointwise and recover P");
  solve->add_option("file", path, "Problem file")->required();
  solve->add_option("--out", solve_options.out_path, "Write the solution here");
  solve->add_option("--grid", solve_options.grid, "Fixed grid size (power of two)");
  solve->add_option("--tol", solve_options.tol, "Solver tolerance");
  solve->add_flag("--force-pointwise", solve_options.force_pointwise,
                  "Skip hypothesis checks (non-conforming output)");

  rb::cli::CertifyOptions certify_options;
  auto* certify = app.add_subcommand("certify", "Stability and decay certificates");
  certify->add_option("file", path, "Problem file")->required();
  certify->add_option("--solution", certify_options.solution_path, "Solution from solve");
  certify->add_option("--weight", certify_options.weight, "unit | poly:<s> | subexp:<a>,<b>");
  certify->add_option("--grid", certify_options.grid, "Grid size when solving in place");
  certify->add_flag("--c1-probe", certify_options.c1_probe, "Also test (1+|k|) weights");
  certify->add_flag("--force-pointwise", certify_options.force_pointwise,
                    "Solve in place without hypothesis checks");

  std::string demo_name;
  auto* demo = app.add_subcommand("demo", "Run a named example end to end");
  demo->add_option("name", demo_name,
                   "counterexample | corrected | second_involution | spatial_ring")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : rb::cli::kExitInput;
  }

  if (*check) return rb::cli::CmdCheck(path, std::cout, std::cerr);
  if (*solve) return rb::cli::CmdSolve(path, solve_options, std::cout, std::cerr);
  if (*certify) return rb::cli::CmdCertify(path, certify_options, std::cout, std::cerr);
  if (*demo) return rb::cli::CmdDemo(demo_name, std::cout, std::cerr);
  return rb::cli::kExitInput;
}
