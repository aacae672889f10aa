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

// Command-line front end.
//
//   fohorse solve <file.mps> [options]
//   fohorse bench <dir> [options]
//
// Exit codes: 0 optimal (solve) or finished (bench), 2 infeasibility
// detected, 3 iteration or time limit, 4 input error, 5 numerical error.

#ifndef FOHORSE_CLI_H_
#define FOHORSE_CLI_H_

#include <string>

#include "fohorse/solver.h"

namespace fohorse {

inline constexpr int kExitOptimal = 0;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitLimit = 3;
inline constexpr int kExitInputError = 4;
inline constexpr int kExitNumericalError = 5;

int exit_code_for(SolveStatus status);

// The JSON document written by `solve --json`. When `maximize` is set the
// objectives are reported with their original sign.
std::string result_json(const SolveResult& result, bool maximize);

int run_cli(int argc, char** argv);

}  // namespace fohorse

#endif  // FOHORSE_CLI_H_
