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

// Diagonal preconditioning. The working problem uses K~ = D1 K D2 with
// c~ = D2 c, q~ = D1 q, l~ = D2^{-1} l and u~ = D2^{-1} u. A working-space
// iterate (x~, y~) corresponds to the original-space point (D2 x~, D1 y~).

#ifndef FOHORSE_SCALING_H_
#define FOHORSE_SCALING_H_

#include <span>
#include <utility>

#include "fohorse/problem.h"
#include "fohorse/sparse_matrix.h"

namespace fohorse {

struct ScalingInfo {
  Vector d_row;  // diagonal of D1, length rows(K)
  Vector d_col;  // diagonal of D2, length cols(K)

  static ScalingInfo Identity(Index nrows, Index ncols);
  // Elementwise product of the diagonals: applying `first` then `second` is
  // the same as applying first.then(second).
  ScalingInfo then(const ScalingInfo& second) const;
};

// Ruiz equilibration in the infinity norm: each pass divides every row and
// column by the square root of its current max-abs entry. Zero rows and
// columns keep scale 1.
std::pair<SparseMatrix, ScalingInfo> ruiz(const SparseMatrix& k,
                                          int iterations);

// d_row[i] = 1/sqrt(sum_j |K_ij|^(2-alpha)),
// d_col[j] = 1/sqrt(sum_i |K_ij|^alpha). Requires 0 <= alpha <= 2.
ScalingInfo pock_chambolle(const SparseMatrix& k, double alpha);

SaddleForm apply_scaling(const SaddleForm& saddle, const ScalingInfo& info);

// (D2 x~, D1 y~).
std::pair<Vector, Vector> unscale_iterate(std::span<const double> x,
                                          std::span<const double> y,
                                          const ScalingInfo& info);

struct PreconditionOptions {
  bool enabled = true;
  int ruiz_iterations = 10;
  double pc_alpha = 1.0;
};

// Ruiz followed by one Pock-Chambolle pass on the Ruiz-scaled matrix;
// identity scaling when disabled.
std::pair<SaddleForm, ScalingInfo> precondition(
    const SaddleForm& saddle, const PreconditionOptions& options);

}  // namespace fohorse

#endif  // FOHORSE_SCALING_H_
