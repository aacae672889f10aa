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

// MPS reader and writer.
//
// Supported sections: NAME, OBJSENSE, ROWS (N/E/L/G), COLUMNS (with
// INTORG/INTEND markers), RHS, RANGES, BOUNDS (LO/UP/FX/FR/MI/PL/BV/LI/UI)
// and ENDATA. Rows are mapped onto the LpProblem form as follows:
//
//   E row    a^T x = r          -> a row of A
//   G row    a^T x >= r         -> a row of G
//   L row    a^T x <= r         -> the G row -a^T x >= -r
//   ranged   lo <= a^T x <= hi  -> two G rows, a^T x >= lo and -a^T x >= -hi
//
// An RHS entry on the objective row sets objective_constant = -value.
// Integer columns are relaxed to continuous ones with a warning.

#ifndef FOHORSE_MPS_H_
#define FOHORSE_MPS_H_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "fohorse/problem.h"

namespace fohorse {

enum class MpsDialect { kFree, kFixed };

struct MpsParseResult {
  LpProblem problem;
  // The file asked for maximization; `problem` minimizes -c^T x, so its
  // objectives are the negated ones.
  bool maximize = false;
  bool relaxed_integrality = false;
  std::vector<std::string> warnings;
};

// Throws Error with kSyntaxError, kDuplicateRow, kDuplicateColumn,
// kUnknownRowReference, kMultipleObjectiveRows or kEmptyProblem. Messages
// carry the 1-based line number; Error::index() is the line number too.
MpsParseResult parse_mps(std::string_view text,
                         MpsDialect dialect = MpsDialect::kFree);
MpsParseResult parse_mps(std::istream& in,
                         MpsDialect dialect = MpsDialect::kFree);
// Throws kIoError if the file cannot be read.
MpsParseResult read_mps_file(const std::string& path,
                             MpsDialect dialect = MpsDialect::kFree);

// Free-format MPS. Inequality rows are written as G rows and equality rows
// as E rows; row and column names are generated.
std::string write_mps(const LpProblem& problem);

}  // namespace fohorse

#endif  // FOHORSE_MPS_H_
