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

#include "fohorse/scaling.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "fohorse/status.h"

namespace fohorse {
namespace {

void CheckLength(size_t actual, Index expected, const char* what) {
  if (static_cast<Index>(actual) != expected) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + " has length " + std::to_string(actual) +
                    ", expected " + std::to_string(expected));
  }
}

}  // namespace

ScalingInfo ScalingInfo::Identity(Index nrows, Index ncols) {
  return {Vector(static_cast<size_t>(nrows), 1.0),
          Vector(static_cast<size_t>(ncols), 1.0)};
}

ScalingInfo ScalingInfo::then(const ScalingInfo& second) const {
  CheckLength(second.d_row.size(), static_cast<Index>(d_row.size()), "d_row");
  CheckLength(second.d_col.size(), static_cast<Index>(d_col.size()), "d_col");
  ScalingInfo combined = *this;
  for (size_t i = 0; i < d_row.size(); ++i) combined.d_row[i] *= second.d_row[i];
  for (size_t j = 0; j < d_col.size(); ++j) combined.d_col[j] *= second.d_col[j];
  return combined;
}

std::pair<SparseMatrix, ScalingInfo> ruiz(const SparseMatrix& k,
                                          int iterations) {
  ScalingInfo total = ScalingInfo::Identity(k.nrows(), k.ncols());
  SparseMatrix current = k;
  for (int it = 0; it < iterations; ++it) {
    Vector row_scale(static_cast<size_t>(k.nrows()), 1.0);
    Vector col_scale(static_cast<size_t>(k.ncols()), 1.0);
    for (Index i = 0; i < k.nrows(); ++i) {
      const double norm = norm_inf(current.row(i).values);
      if (norm > 0.0) row_scale[static_cast<size_t>(i)] = 1.0 / std::sqrt(norm);
    }
    for (Index j = 0; j < k.ncols(); ++j) {
      const double norm = norm_inf(current.col(j).values);
      if (norm > 0.0) col_scale[static_cast<size_t>(j)] = 1.0 / std::sqrt(norm);
    }
    current = scale(current, row_scale, col_scale);
    total = total.then({row_scale, col_scale});
  }
  return {std::move(current), std::move(total)};
}

ScalingInfo pock_chambolle(const SparseMatrix& k, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 2.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "Pock-Chambolle alpha must lie in [0, 2], got " +
                    std::to_string(alpha));
  }
  ScalingInfo info = ScalingInfo::Identity(k.nrows(), k.ncols());
  for (Index i = 0; i < k.nrows(); ++i) {
    double sum = 0.0;
    for (double v : k.row(i).values) sum += std::pow(std::abs(v), 2.0 - alpha);
    if (sum > 0.0) info.d_row[static_cast<size_t>(i)] = 1.0 / std::sqrt(sum);
  }
  for (Index j = 0; j < k.ncols(); ++j) {
    double sum = 0.0;
    for (double v : k.col(j).values) sum += std::pow(std::abs(v), alpha);
    if (sum > 0.0) info.d_col[static_cast<size_t>(j)] = 1.0 / std::sqrt(sum);
  }
  return info;
}

SaddleForm apply_scaling(const SaddleForm& s, const ScalingInfo& info) {
  CheckLength(info.d_row.size(), s.num_rows(), "d_row");
  CheckLength(info.d_col.size(), s.num_variables(), "d_col");
  SaddleForm scaled = s;
  scaled.k_matrix = scale(s.k_matrix, info.d_row, info.d_col);
  for (size_t i = 0; i < scaled.q.size(); ++i) scaled.q[i] *= info.d_row[i];
  for (size_t j = 0; j < scaled.objective.size(); ++j) {
    scaled.objective[j] *= info.d_col[j];
    // Division keeps infinite bounds infinite with their sign.
    scaled.lower[j] /= info.d_col[j];
    scaled.upper[j] /= info.d_col[j];
  }
  return scaled;
}

std::pair<Vector, Vector> unscale_iterate(std::span<const double> x,
                                          std::span<const double> y,
                                          const ScalingInfo& info) {
  CheckLength(x.size(), static_cast<Index>(info.d_col.size()), "x");
  CheckLength(y.size(), static_cast<Index>(info.d_row.size()), "y");
  Vector ox(x.begin(), x.end());
  Vector oy(y.begin(), y.end());
  for (size_t j = 0; j < ox.size(); ++j) ox[j] *= info.d_col[j];
  for (size_t i = 0; i < oy.size(); ++i) oy[i] *= info.d_row[i];
  return {std::move(ox), std::move(oy)};
}

std::pair<SaddleForm, ScalingInfo> precondition(
    const SaddleForm& saddle, const PreconditionOptions& options) {
  if (!options.enabled) {
    return {saddle,
            ScalingInfo::Identity(saddle.num_rows(), saddle.num_variables())};
  }
  auto [ruiz_matrix, ruiz_info] = ruiz(saddle.k_matrix, options.ruiz_iterations);
  const ScalingInfo pc_info = pock_chambolle(ruiz_matrix, options.pc_alpha);
  const ScalingInfo info = ruiz_info.then(pc_info);
  return {apply_scaling(saddle, info), info};
}

}  // namespace fohorse
