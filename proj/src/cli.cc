// Copyright 2026 The fohorse Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fohorse/cli.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <thread>

#include "CLI11.hpp"
#include "fohorse/bench.h"
#include "fohorse/mps.h"
#include "fohorse/status.h"
#include "json.hpp"

namespace fohorse {
namespace {

using nlohmann::json;

json KktJson(const KktComponents& kkt) {
  return {{"primal_residual", kkt.primal_residual},
          {"dual_residual", kkt.dual_residual},
          {"gap_abs", kkt.gap_abs}};
}

// Writes `text` to `path`; false on failure.
bool WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

int ThreadCount() {
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("FOHORSE_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) threads = std::min(threads, cap);
  }
  return threads;
}

struct SolveArgs {
  std::string path;
  double tol = 1e-4;
  std::string mode = "r2hpdhg";
  std::string restart = "fpr";
  Index iter_limit = 1'000'000;
  double time_limit = 3600.0;
  bool no_precondition = false;
  std::string json_path;
  std::string trace_path;
  Index trace_every = 1;
};

struct BenchArgs {
  std::string dir;
  double tol = 1e-4;
  double time_limit = 60.0;
  std::string csv_path;
};

int RunSolve(const SolveArgs& args) {
  MpsParseResult parsed;
  try {
    parsed = read_mps_file(args.path);
  } catch (const Error& e) {
    std::cerr << args.path << ": " << e.what() << "\n";
    return kExitInputError;
  }
  for (const std::string& w : parsed.warnings) {
    std::cerr << args.path << ": warning: " << w << "\n";
  }

  static const std::map<std::string, SolverMode> kModes = {
      {"r2hpdhg", SolverMode::kReflectedHalpern},
      {"hpdhg", SolverMode::kHalpern},
      {"pdhg", SolverMode::kVanillaPdhg},
      {"average", SolverMode::kAverage}};
  static const std::map<std::string, RestartScheme> kRestarts = {
      {"fpr", RestartScheme::kFixedPointResidual},
      {"kkt", RestartScheme::kKktError},
      {"none", RestartScheme::kNone}};

  SolverConfig config;
  config.tolerance_eps = args.tol;
  config.mode = kModes.at(args.mode);
  config.restart_scheme = kRestarts.at(args.restart);
  config.iteration_limit = args.iter_limit;
  config.time_limit = args.time_limit;
  config.preconditioning.enabled = !args.no_precondition;

  std::ofstream trace;
  if (!args.trace_path.empty()) {
    trace.open(args.trace_path, std::ios::binary);
    if (!trace) {
      std::cerr << "cannot write " << args.trace_path << "\n";
      return kExitInputError;
    }
    config.trace_every = args.trace_every;
    config.trace = [&trace](const TraceEvent& e) {
      json line = {{"k", e.iteration},      {"epoch", e.epoch},
                   {"inner_k", e.inner_k},  {"eta", e.eta},
                   {"omega", e.omega},      {"residual", e.residual},
                   {"restart", e.restart}};
      if (e.kkt) line["kkt"] = KktJson(*e.kkt);
      trace << line.dump() << "\n";
    };
  }

  SolveResult result;
  try {
    result = solve(parsed.problem, config);
  } catch (const Error& e) {
    std::cerr << args.path << ": " << e.what() << "\n";
    return kExitInputError;
  }
  for (const std::string& w : result.warnings) {
    std::cerr << "warning: " << w << "\n";
  }
  const double sign = parsed.maximize ? -1.0 : 1.0;
  std::printf("status %s\nprimal_objective %.12g\ndual_objective %.12g\n"
              "iterations %lld\nrestarts %lld\nsolve_time_sec %.6f\n",
              std::string(SolveStatusName(result.status)).c_str(),
              sign * result.primal_objective, sign * result.dual_objective,
              static_cast<long long>(result.iterations),
              static_cast<long long>(result.restarts), result.solve_time);

  if (!args.json_path.empty() &&
      !WriteFile(args.json_path, result_json(result, parsed.maximize) + "\n")) {
    std::cerr << "cannot write " << args.json_path << "\n";
    return kExitInputError;
  }
  return exit_code_for(result.status);
}

int RunBench(const BenchArgs& args) {
  std::vector<std::string> paths;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(args.dir, ec)) {
    if (!entry.is_regular_file()) continue;
    const std::string ext = entry.path().extension().string();
    if (ext == ".mps" || ext == ".MPS") paths.push_back(entry.path().string());
  }
  if (ec) {
    std::cerr << "cannot read directory " << args.dir << ": " << ec.message() << "\n";
    return kExitInputError;
  }
  if (paths.empty()) {
    std::cerr << "no .mps files in " << args.dir << "\n";
    return kExitInputError;
  }
  std::sort(paths.begin(), paths.end());

  SolverConfig config;
  config.tolerance_eps = args.tol;
  config.time_limit = args.time_limit;
  const BenchReport report = run_benchmark(paths, config, ThreadCount());
  for (const BenchRow& row : report.rows) {
    if (!row.error.empty()) std::cerr << row.name << ": " << row.error << "\n";
  }
  const std::string csv = bench_csv(report);
  std::cout << csv;
  std::printf("solved %lld/%zu\nsgm10 %.6f\n",
              static_cast<long long>(report.solved_count), report.rows.size(),
              report.sgm10);
  if (!args.csv_path.empty() && !WriteFile(args.csv_path, csv)) {
    std::cerr << "cannot write " << args.csv_path << "\n";
    return kExitInputError;
  }
  return kExitOptimal;
}

}  // namespace

int exit_code_for(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return kExitOptimal;
    case SolveStatus::kPrimalInfeasible:
    case SolveStatus::kDualInfeasible: return kExitInfeasible;
    case SolveStatus::kIterationLimit:
    case SolveStatus::kTimeLimit: return kExitLimit;
    case SolveStatus::kNumericalError: return kExitNumericalError;
  }
  return kExitNumericalError;
}

std::string result_json(const SolveResult& result, bool maximize) {
  const double sign = maximize ? -1.0 : 1.0;
  json doc = {{"status", SolveStatusName(result.status)},
              {"primal_objective", sign * result.primal_objective},
              {"dual_objective", sign * result.dual_objective},
              {"iterations", result.iterations},
              {"restarts", result.restarts},
              {"solve_time_sec", result.solve_time},
              {"kkt", KktJson(result.kkt)},
              {"x", result.x},
              {"y", result.y}};
  if (result.certificate) {
    doc["certificate"] = {
        {"kind", result.status == SolveStatus::kPrimalInfeasible
                     ? "primal_infeasible"
                     : "dual_infeasible"},
        {"candidate", result.certificate->kind == CandidateKind::kDifference
                          ? "difference"
                          : "normalized"},
        {"ray", result.certificate->ray}};
  }
  if (!result.warnings.empty()) doc["warnings"] = result.warnings;
  return doc.dump(2);
}

int run_cli(int argc, char** argv) {
  CLI::App app{"First-order LP solver"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve one MPS file");
  solve_cmd->add_option("path", solve_args.path, "MPS file")->required();
  solve_cmd->add_option("--tol", solve_args.tol, "Relative KKT tolerance")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--mode", solve_args.mode, "Iteration scheme")
      ->check(CLI::IsMember({"r2hpdhg", "hpdhg", "pdhg", "average"}));
  solve_cmd->add_option("--restart", solve_args.restart, "Restart scheme")
      ->check(CLI::IsMember({"fpr", "kkt", "none"}));
  solve_cmd->add_option("--iter-limit", solve_args.iter_limit, "Iteration limit")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--time-limit", solve_args.time_limit, "Time limit in seconds")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--no-precondition", solve_args.no_precondition,
                      "Disable diagonal preconditioning");
  solve_cmd->add_option("--json", solve_args.json_path, "Write the result as JSON");
  solve_cmd->add_option("--trace", solve_args.trace_path,
                        "Write an iteration trace as JSON Lines");
  solve_cmd->add_option("--trace-every", solve_args.trace_every,
                        "Log every N-th iteration")
      ->check(CLI::PositiveNumber);

  BenchArgs bench_args;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Solve every MPS file in a directory");
  bench_cmd->add_option("dir", bench_args.dir, "Directory of MPS files")->required();
  bench_cmd->add_option("--tol", bench_args.tol, "Relative KKT tolerance")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--time-limit", bench_args.time_limit,
                        "Per-instance time limit in seconds")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--csv", bench_args.csv_path, "Write the table as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }
  if (solve_cmd->parsed()) return RunSolve(solve_args);
  return RunBench(bench_args);
}

}  // namespace fohorse
