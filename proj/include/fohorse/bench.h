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

// Benchmark runs over a list of MPS files.

#ifndef FOHORSE_BENCH_H_
#define FOHORSE_BENCH_H_

#include <span>
#include <string>
#include <vector>

#include "fohorse/solver.h"

namespace fohorse {

// (prod_i (t_i + delta))^(1/n) - delta, evaluated in log space. Throws
// kEmptyInput for an empty list and kInvalidArgument for negative inputs.
double sgm10(std::span<const double> times, double delta = 10.0);

struct BenchRow {
  std::string name;
  std::string status;  // a SolveStatus name, or "InputError"
  bool solved = false;
  Index iterations = 0;
  double solve_time = 0.0;  // measured wall time
  double objective = 0.0;
  std::string error;        // set for InputError rows
};

// Optimal and certified-infeasible results count as solved.
bool counts_as_solved(SolveStatus status);

// Time charged to a row in the aggregate: the measured time when solved,
// the time limit otherwise.
double charged_time(const BenchRow& row, double time_limit);

struct BenchReport {
  std::vector<BenchRow> rows;
  double sgm10 = 0.0;
  Index solved_count = 0;
  double time_limit_used = 0.0;
};

// Builds the aggregate fields from finished rows.
BenchReport summarize(std::vector<BenchRow> rows, double time_limit);

// Solves every file with up to `threads` concurrent solves. Rows keep the
// order of `paths`. Unreadable or malformed files become InputError rows.
BenchReport run_benchmark(const std::vector<std::string>& paths,
                          const SolverConfig& config, int threads);

// Header plus one line per row: name,status,iterations,solve_time_sec,objective.
std::string bench_csv(const BenchReport& report);

}  // namespace fohorse

#endif  // FOHORSE_BENCH_H_
