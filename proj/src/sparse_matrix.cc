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

#include "fohorse/sparse_matrix.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "fohorse/status.h"

namespace fohorse {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kCrossedBounds: return "CrossedBounds";
    case ErrorCode::kNonFiniteEntry: return "NonFiniteEntry";
    case ErrorCode::kNonPositiveScale: return "NonPositiveScale";
    case ErrorCode::kNonFiniteIterate: return "NonFiniteIterate";
    case ErrorCode::kStepSizeCollapse: return "StepSizeCollapse";
    case ErrorCode::kEmptyAverage: return "EmptyAverage";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kDuplicateRow: return "DuplicateRow";
    case ErrorCode::kDuplicateColumn: return "DuplicateColumn";
    case ErrorCode::kUnknownRowReference: return "UnknownRowReference";
    case ErrorCode::kMultipleObjectiveRows: return "MultipleObjectiveRows";
    case ErrorCode::kEmptyProblem: return "EmptyProblem";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

SparseMatrix::SparseMatrix(Index nrows, Index ncols)
    : nrows_(nrows),
      ncols_(ncols),
      row_starts_(static_cast<size_t>(nrows) + 1, 0),
      col_starts_(static_cast<size_t>(ncols) + 1, 0) {
  if (nrows < 0 || ncols < 0) {
    throw Error(ErrorCode::kDimensionMismatch, "negative matrix dimension");
  }
}

SparseMatrix SparseMatrix::FromTriplets(Index nrows, Index ncols,
                                        std::span<const Triplet> triplets) {
  SparseMatrix m(nrows, ncols);
  std::vector<Triplet> sorted(triplets.begin(), triplets.end());
  for (const Triplet& t : sorted) {
    if (t.row < 0 || t.row >= nrows || t.col < 0 || t.col >= ncols) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "entry (" + std::to_string(t.row) + ", " +
                      std::to_string(t.col) + ") outside " +
                      std::to_string(nrows) + "x" + std::to_string(ncols));
    }
    if (!std::isfinite(t.value)) {
      throw Error(ErrorCode::kNonFiniteEntry,
                  "entry (" + std::to_string(t.row) + ", " +
                      std::to_string(t.col) + ") is not finite",
                  t.row);
    }
  }
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Triplet& a, const Triplet& b) {
                     return a.row != b.row ? a.row < b.row : a.col < b.col;
                   });
  m.col_indices_.reserve(sorted.size());
  m.row_values_.reserve(sorted.size());
  size_t k = 0;
  for (Index i = 0; i < nrows; ++i) {
    while (k < sorted.size() && sorted[k].row == i) {
      const Index j = sorted[k].col;
      double sum = 0.0;
      while (k < sorted.size() && sorted[k].row == i && sorted[k].col == j) {
        sum += sorted[k].value;
        ++k;
      }
      if (sum != 0.0) {
        m.col_indices_.push_back(j);
        m.row_values_.push_back(sum);
      }
    }
    m.row_starts_[static_cast<size_t>(i) + 1] =
        static_cast<Index>(m.col_indices_.size());
  }
  m.BuildColumnLayout();
  return m;
}

SparseMatrix SparseMatrix::FromDense(Index nrows, Index ncols,
                                     std::span<const double> row_major) {
  if (static_cast<Index>(row_major.size()) != nrows * ncols) {
    throw Error(ErrorCode::kDimensionMismatch,
                "dense data has " + std::to_string(row_major.size()) +
                    " values, expected " + std::to_string(nrows * ncols));
  }
  std::vector<Triplet> triplets;
  for (Index i = 0; i < nrows; ++i) {
    for (Index j = 0; j < ncols; ++j) {
      const double v = row_major[static_cast<size_t>(i * ncols + j)];
      if (v != 0.0) triplets.push_back({i, j, v});
    }
  }
  return FromTriplets(nrows, ncols, triplets);
}

SparseMatrix SparseMatrix::Identity(Index n) {
  std::vector<Triplet> triplets;
  triplets.reserve(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i) triplets.push_back({i, i, 1.0});
  return FromTriplets(n, n, triplets);
}

SparseMatrix SparseMatrix::VStack(const SparseMatrix& top,
                                  const SparseMatrix& bottom) {
  if (top.ncols() != bottom.ncols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cannot stack matrices with " + std::to_string(top.ncols()) +
                    " and " + std::to_string(bottom.ncols()) + " columns");
  }
  SparseMatrix m(top.nrows() + bottom.nrows(), top.ncols());
  m.col_indices_ = top.col_indices_;
  m.col_indices_.insert(m.col_indices_.end(), bottom.col_indices_.begin(),
                        bottom.col_indices_.end());
  m.row_values_ = top.row_values_;
  m.row_values_.insert(m.row_values_.end(), bottom.row_values_.begin(),
                       bottom.row_values_.end());
  std::copy(top.row_starts_.begin(), top.row_starts_.end(),
            m.row_starts_.begin());
  const Index offset = top.nnz();
  for (Index i = 1; i <= bottom.nrows(); ++i) {
    m.row_starts_[static_cast<size_t>(top.nrows() + i)] =
        offset + bottom.row_starts_[static_cast<size_t>(i)];
  }
  m.BuildColumnLayout();
  return m;
}

void SparseMatrix::BuildColumnLayout() {
  col_starts_.assign(static_cast<size_t>(ncols_) + 1, 0);
  for (Index j : col_indices_) ++col_starts_[static_cast<size_t>(j) + 1];
  std::partial_sum(col_starts_.begin(), col_starts_.end(), col_starts_.begin());
  row_indices_.assign(col_indices_.size(), 0);
  col_values_.assign(col_indices_.size(), 0.0);
  std::vector<Index> next(col_starts_.begin(), col_starts_.end() - 1);
  // Rows are visited in increasing order, so each column comes out sorted.
  for (Index i = 0; i < nrows_; ++i) {
    for (Index k = row_starts_[static_cast<size_t>(i)];
         k < row_starts_[static_cast<size_t>(i) + 1]; ++k) {
      const Index j = col_indices_[static_cast<size_t>(k)];
      const Index dst = next[static_cast<size_t>(j)]++;
      row_indices_[static_cast<size_t>(dst)] = i;
      col_values_[static_cast<size_t>(dst)] =
          row_values_[static_cast<size_t>(k)];
    }
  }
}

SparseSlice SparseMatrix::row(Index i) const {
  const auto begin = static_cast<size_t>(row_starts_[static_cast<size_t>(i)]);
  const auto end =
      static_cast<size_t>(row_starts_[static_cast<size_t>(i) + 1]);
  return {std::span<const Index>(col_indices_).subspan(begin, end - begin),
          std::span<const double>(row_values_).subspan(begin, end - begin)};
}

SparseSlice SparseMatrix::col(Index j) const {
  const auto begin = static_cast<size_t>(col_starts_[static_cast<size_t>(j)]);
  const auto end =
      static_cast<size_t>(col_starts_[static_cast<size_t>(j) + 1]);
  return {std::span<const Index>(row_indices_).subspan(begin, end - begin),
          std::span<const double>(col_values_).subspan(begin, end - begin)};
}

double SparseMatrix::coeff(Index i, Index j) const {
  const SparseSlice r = row(i);
  const auto it = std::lower_bound(r.indices.begin(), r.indices.end(), j);
  if (it == r.indices.end() || *it != j) return 0.0;
  return r.values[static_cast<size_t>(it - r.indices.begin())];
}

double SparseMatrix::max_abs() const {
  double result = 0.0;
  for (double v : row_values_) result = std::max(result, std::abs(v));
  return result;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(ncols_, nrows_);
  t.row_starts_ = col_starts_;
  t.col_indices_ = row_indices_;
  t.row_values_ = col_values_;
  t.col_starts_ = row_starts_;
  t.row_indices_ = col_indices_;
  t.col_values_ = row_values_;
  return t;
}

std::vector<Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> result;
  result.reserve(row_values_.size());
  for (Index i = 0; i < nrows_; ++i) {
    const SparseSlice r = row(i);
    for (Index k = 0; k < r.size(); ++k) {
      result.push_back({i, r.indices[static_cast<size_t>(k)],
                        r.values[static_cast<size_t>(k)]});
    }
  }
  return result;
}

std::vector<double> SparseMatrix::to_dense() const {
  std::vector<double> dense(static_cast<size_t>(nrows_ * ncols_), 0.0);
  for (const Triplet& t : triplets()) {
    dense[static_cast<size_t>(t.row * ncols_ + t.col)] = t.value;
  }
  return dense;
}

bool SparseMatrix::operator==(const SparseMatrix& other) const {
  return nrows_ == other.nrows_ && ncols_ == other.ncols_ &&
         row_starts_ == other.row_starts_ &&
         col_indices_ == other.col_indices_ &&
         row_values_ == other.row_values_;
}

namespace {

void CheckLength(size_t actual, Index expected, const char* what) {
  if (static_cast<Index>(actual) != expected) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + " has length " + std::to_string(actual) +
                    ", expected " + std::to_string(expected));
  }
}

}  // namespace

void spmv(const SparseMatrix& m, std::span<const double> v,
          std::span<double> out) {
  CheckLength(v.size(), m.ncols(), "spmv input");
  CheckLength(out.size(), m.nrows(), "spmv output");
  for (Index i = 0; i < m.nrows(); ++i) {
    const SparseSlice r = m.row(i);
    double sum = 0.0;
    for (Index k = 0; k < r.size(); ++k) {
      sum += r.values[static_cast<size_t>(k)] *
             v[static_cast<size_t>(r.indices[static_cast<size_t>(k)])];
    }
    out[static_cast<size_t>(i)] = sum;
  }
}

Vector spmv(const SparseMatrix& m, std::span<const double> v) {
  Vector out(static_cast<size_t>(m.nrows()));
  spmv(m, v, out);
  return out;
}

void spmv_t(const SparseMatrix& m, std::span<const double> v,
            std::span<double> out) {
  CheckLength(v.size(), m.nrows(), "spmv_t input");
  CheckLength(out.size(), m.ncols(), "spmv_t output");
  for (Index j = 0; j < m.ncols(); ++j) {
    const SparseSlice c = m.col(j);
    double sum = 0.0;
    for (Index k = 0; k < c.size(); ++k) {
      sum += c.values[static_cast<size_t>(k)] *
             v[static_cast<size_t>(c.indices[static_cast<size_t>(k)])];
    }
    out[static_cast<size_t>(j)] = sum;
  }
}

Vector spmv_t(const SparseMatrix& m, std::span<const double> v) {
  Vector out(static_cast<size_t>(m.ncols()));
  spmv_t(m, v, out);
  return out;
}

SpectralNormEstimate estimate_spectral_norm(const SparseMatrix& m,
                                            int iterations,
                                            std::uint64_t seed) {
  if (iterations < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "power iteration needs at least one iteration");
  }
  SpectralNormEstimate result;
  if (m.nnz() == 0) {
    result.zero_matrix = true;
    return result;
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Vector v(static_cast<size_t>(m.ncols()));
  for (double& vi : v) vi = normal(rng);
  Vector mv(static_cast<size_t>(m.nrows()));
  Vector mtmv(static_cast<size_t>(m.ncols()));
  auto normalize = [&result](Vector& x) {
    const double n = norm2(x);
    if (n == 0.0) {
      result.zero_matrix = true;
      return false;
    }
    for (double& xi : x) xi /= n;
    return true;
  };
  if (!normalize(v)) return result;
  for (int it = 0; it < iterations; ++it) {
    spmv(m, v, mv);
    spmv_t(m, mv, mtmv);
    v.swap(mtmv);
    if (!normalize(v)) return result;
  }
  spmv(m, v, mv);
  result.value = norm2(mv);
  return result;
}

SparseMatrix scale(const SparseMatrix& m, std::span<const double> row_scale,
                   std::span<const double> col_scale) {
  CheckLength(row_scale.size(), m.nrows(), "row scale");
  CheckLength(col_scale.size(), m.ncols(), "column scale");
  auto check_positive = [](std::span<const double> s, const char* what) {
    for (size_t i = 0; i < s.size(); ++i) {
      if (!(s[i] > 0.0) || !std::isfinite(s[i])) {
        throw Error(ErrorCode::kNonPositiveScale,
                    std::string(what) + " " + std::to_string(i) + " is " +
                        std::to_string(s[i]),
                    static_cast<Index>(i));
      }
    }
  };
  check_positive(row_scale, "row scale");
  check_positive(col_scale, "column scale");
  std::vector<Triplet> scaled = m.triplets();
  for (Triplet& t : scaled) {
    t.value = row_scale[static_cast<size_t>(t.row)] * t.value *
              col_scale[static_cast<size_t>(t.col)];
  }
  // The pattern must survive: an entry underflowing to zero is an error.
  SparseMatrix result = SparseMatrix::FromTriplets(m.nrows(), m.ncols(), scaled);
  if (result.nnz() != m.nnz()) {
    throw Error(ErrorCode::kNonPositiveScale,
                "scaling underflowed a matrix entry to zero");
  }
  return result;
}

double dot(std::span<const double> a, std::span<const double> b) {
  CheckLength(b.size(), static_cast<Index>(a.size()), "dot operand");
  double sum = 0.0;
  for (size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

double norm2(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

double norm_inf(std::span<const double> v) {
  double result = 0.0;
  for (double x : v) result = std::max(result, std::abs(x));
  return result;
}

}  // namespace fohorse
