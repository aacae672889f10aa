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

#include "fohorse/bench.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <thread>

#include "fohorse/mps.h"
#include "fohorse/status.h"

namespace fohorse {

double sgm10(std::span<const double> times, double delta) {
  if (times.empty()) throw Error(ErrorCode::kEmptyInput, "no times given");
  if (!(delta >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "shift must be nonnegative");
  }
  double log_sum = 0.0;
  for (double t : times) {
    if (!(t >= 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "times must be nonnegative");
    }
    log_sum += std::log(t + delta);
  }
  return std::exp(log_sum / static_cast<double>(times.size())) - delta;
}

bool counts_as_solved(SolveStatus status) {
  return status == SolveStatus::kOptimal ||
         status == SolveStatus::kPrimalInfeasible ||
         status == SolveStatus::kDualInfeasible;
}

double charged_time(const BenchRow& row, double time_limit) {
  return row.solved ? row.solve_time : time_limit;
}

BenchReport summarize(std::vector<BenchRow> rows, double time_limit) {
  BenchReport report;
  report.time_limit_used = time_limit;
  std::vector<double> times;
  for (const BenchRow& row : rows) {
    if (row.solved) ++report.solved_count;
    times.push_back(charged_time(row, time_limit));
  }
  report.sgm10 = sgm10(times);
  report.rows = std::move(rows);
  return report;
}

namespace {

BenchRow SolveOne(const std::string& path, const SolverConfig& config) {
  BenchRow row;
  row.name = std::filesystem::path(path).filename().string();
  try {
    const MpsParseResult parsed = read_mps_file(path);
    const SolveResult result = solve(parsed.problem, config);
    row.status = std::string(SolveStatusName(result.status));
    row.solved = counts_as_solved(result.status);
    row.iterations = result.iterations;
    row.solve_time = result.solve_time;
    row.objective =
        parsed.maximize ? -result.primal_objective : result.primal_objective;
  } catch (const Error& e) {
    row.status = "InputError";
    row.error = e.what();
  }
  return row;
}

}  // namespace

BenchReport run_benchmark(const std::vector<std::string>& paths,
                          const SolverConfig& config, int threads) {
  if (paths.empty()) throw Error(ErrorCode::kEmptyInput, "no instances");
  std::vector<BenchRow> rows(paths.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < paths.size(); i = next++) {
      rows[i] = SolveOne(paths[i], config);
    }
  };
  const int count =
      std::clamp(threads, 1, static_cast<int>(paths.size()));
  if (count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return summarize(std::move(rows), config.time_limit);
}

std::string bench_csv(const BenchReport& report) {
  std::string out = "name,status,iterations,solve_time_sec,objective\n";
  char buffer[128];
  for (const BenchRow& row : report.rows) {
    std::snprintf(buffer, sizeof(buffer), ",%lld,%.6f,%.17g\n",
                  static_cast<long long>(row.iterations),
                  charged_time(row, report.time_limit_used), row.objective);
    out += row.name + "," + row.status + buffer;
  }
  return out;
}

}  // namespace fohorse
