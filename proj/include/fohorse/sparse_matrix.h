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

// Sparse matrix storage and the matrix-vector kernels every iteration of the
// solver is built from. A SparseMatrix keeps the same entries in both a
// row-major (CSR) and a column-major (CSC) layout, so that M*v and M^T*v each
// stream through contiguous memory. Memory doubles relative to a single
// layout but remains linear in the number of nonzeros.
//
// Summation order is fixed: spmv() accumulates each row left to right in
// increasing column order, spmv_t() accumulates each column in increasing row
// order. Consequently spmv_t(M, v) is bitwise equal to
// spmv(M.transpose(), v).

#ifndef FOHORSE_SPARSE_MATRIX_H_
#define FOHORSE_SPARSE_MATRIX_H_

#include <cstdint>
#include <span>
#include <vector>

namespace fohorse {

using Index = std::int64_t;
using Vector = std::vector<double>;

struct Triplet {
  Index row;
  Index col;
  double value;
};

// A contiguous run of (index, value) pairs: one row of the CSR layout or one
// column of the CSC layout.
struct SparseSlice {
  std::span<const Index> indices;
  std::span<const double> values;

  Index size() const { return static_cast<Index>(indices.size()); }
};

class SparseMatrix {
 public:
  // 0 x 0.
  SparseMatrix() : SparseMatrix(0, 0) {}
  // nrows x ncols with no entries.
  SparseMatrix(Index nrows, Index ncols);

  // Duplicate (i, j) pairs are summed; entries that are (or sum to) exactly
  // zero are dropped. Throws kDimensionMismatch for out-of-range indices and
  // kNonFiniteEntry for NaN/inf values.
  static SparseMatrix FromTriplets(Index nrows, Index ncols,
                                   std::span<const Triplet> triplets);
  // `row_major` holds nrows*ncols values.
  static SparseMatrix FromDense(Index nrows, Index ncols,
                                std::span<const double> row_major);
  static SparseMatrix Identity(Index n);
  // Rows of `top` followed by rows of `bottom`.
  static SparseMatrix VStack(const SparseMatrix& top,
                             const SparseMatrix& bottom);

  Index nrows() const { return nrows_; }
  Index ncols() const { return ncols_; }
  Index nnz() const { return static_cast<Index>(row_values_.size()); }

  SparseSlice row(Index i) const;
  SparseSlice col(Index j) const;

  // Value at (i, j); zero when not stored. O(log nnz(row i)).
  double coeff(Index i, Index j) const;
  // Largest |entry|, 0 for a matrix without entries.
  double max_abs() const;

  SparseMatrix transpose() const;
  std::vector<Triplet> triplets() const;
  std::vector<double> to_dense() const;

  // Entry-set equality (same shape, same pattern, same values).
  bool operator==(const SparseMatrix& other) const;

  // Raw layouts, exposed for pattern comparisons in tests.
  const std::vector<Index>& row_starts() const { return row_starts_; }
  const std::vector<Index>& col_indices() const { return col_indices_; }
  const std::vector<Index>& col_starts() const { return col_starts_; }
  const std::vector<Index>& row_indices() const { return row_indices_; }

 private:
  Index nrows_;
  Index ncols_;
  // CSR.
  std::vector<Index> row_starts_;
  std::vector<Index> col_indices_;
  std::vector<double> row_values_;
  // CSC.
  std::vector<Index> col_starts_;
  std::vector<Index> row_indices_;
  std::vector<double> col_values_;

  void BuildColumnLayout();
};

// out = M * v. Throws kDimensionMismatch unless len(v) == ncols and
// len(out) == nrows.
void spmv(const SparseMatrix& m, std::span<const double> v,
          std::span<double> out);
Vector spmv(const SparseMatrix& m, std::span<const double> v);

// out = M^T * v, via the column layout.
void spmv_t(const SparseMatrix& m, std::span<const double> v,
            std::span<double> out);
Vector spmv_t(const SparseMatrix& m, std::span<const double> v);

struct SpectralNormEstimate {
  double value = 0.0;
  // Set when M has no entries (or the iteration collapsed onto its kernel).
  bool zero_matrix = false;
};

// Power iteration on M^T M from a seeded Gaussian start. The returned
// ||M v|| / ||v|| is a lower bound on ||M||_2 (up to round-off) and is
// nondecreasing in `iterations`.
SpectralNormEstimate estimate_spectral_norm(const SparseMatrix& m,
                                            int iterations,
                                            std::uint64_t seed = 1);

// Entry (i, j) becomes row_scale[i] * M[i, j] * col_scale[j]; the sparsity
// pattern is untouched. Throws kNonPositiveScale for scales that are not
// positive and finite.
SparseMatrix scale(const SparseMatrix& m, std::span<const double> row_scale,
                   std::span<const double> col_scale);

// Dense vector helpers shared by the numerical modules.
double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> v);
double norm_inf(std::span<const double> v);

}  // namespace fohorse

#endif  // FOHORSE_SPARSE_MATRIX_H_
