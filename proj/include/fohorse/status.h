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

#ifndef FOHORSE_STATUS_H_
#define FOHORSE_STATUS_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fohorse {

enum class ErrorCode {
  kDimensionMismatch,
  kCrossedBounds,
  kNonFiniteEntry,
  kNonPositiveScale,
  kNonFiniteIterate,
  kStepSizeCollapse,
  kEmptyAverage,
  kEmptyInput,
  kTooLarge,
  kInvalidArgument,
  // MPS ingestion.
  kSyntaxError,
  kDuplicateRow,
  kDuplicateColumn,
  kUnknownRowReference,
  kMultipleObjectiveRows,
  kEmptyProblem,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library is an Error. `index()` carries the
// offending element (variable, row, line number) when one exists, else -1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::int64_t index = -1)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code),
        index_(index) {}

  ErrorCode code() const { return code_; }
  std::int64_t index() const { return index_; }

 private:
  ErrorCode code_;
  std::int64_t index_;
};

}  // namespace fohorse

#endif  // FOHORSE_STATUS_H_
