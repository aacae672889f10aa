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

#include "fohorse/problem.h"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "fohorse/status.h"

namespace fohorse {
namespace {

void CheckSize(Index actual, Index expected, const std::string& what) {
  if (actual != expected) {
    throw Error(ErrorCode::kDimensionMismatch,
                what + " is " + std::to_string(actual) + ", expected " +
                    std::to_string(expected));
  }
}

void CheckFinite(std::span<const double> v, const std::string& what) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) {
      throw Error(ErrorCode::kNonFiniteEntry,
                  what + "[" + std::to_string(i) + "] is not finite",
                  static_cast<Index>(i));
    }
  }
}

void CheckMatrixFinite(const SparseMatrix& m, const std::string& what) {
  for (const Triplet& t : m.triplets()) {
    if (!std::isfinite(t.value)) {
      throw Error(ErrorCode::kNonFiniteEntry,
                  what + "(" + std::to_string(t.row) + ", " +
                      std::to_string(t.col) + ") is not finite",
                  t.row);
    }
  }
}

}  // namespace

void validate(const LpProblem& p) {
  const Index n = p.num_variables();
  CheckSize(p.eq_matrix.ncols(), n, "column count of eq_matrix");
  CheckSize(p.ineq_matrix.ncols(), n, "column count of ineq_matrix");
  CheckSize(static_cast<Index>(p.eq_rhs.size()), p.eq_matrix.nrows(),
            "length of eq_rhs");
  CheckSize(static_cast<Index>(p.ineq_rhs.size()), p.ineq_matrix.nrows(),
            "length of ineq_rhs");
  CheckSize(static_cast<Index>(p.lower.size()), n, "length of lower");
  CheckSize(static_cast<Index>(p.upper.size()), n, "length of upper");

  CheckFinite(p.objective, "objective");
  CheckFinite(p.eq_rhs, "eq_rhs");
  CheckFinite(p.ineq_rhs, "ineq_rhs");
  if (!std::isfinite(p.objective_constant)) {
    throw Error(ErrorCode::kNonFiniteEntry, "objective_constant is not finite");
  }
  CheckMatrixFinite(p.eq_matrix, "eq_matrix");
  CheckMatrixFinite(p.ineq_matrix, "ineq_matrix");

  for (Index i = 0; i < n; ++i) {
    const double l = p.lower[static_cast<size_t>(i)];
    const double u = p.upper[static_cast<size_t>(i)];
    if (std::isnan(l) || l == std::numeric_limits<double>::infinity()) {
      throw Error(ErrorCode::kNonFiniteEntry,
                  "lower[" + std::to_string(i) + "] must be finite or -inf", i);
    }
    if (std::isnan(u) || u == -std::numeric_limits<double>::infinity()) {
      throw Error(ErrorCode::kNonFiniteEntry,
                  "upper[" + std::to_string(i) + "] must be finite or +inf", i);
    }
    if (l > u) {
      throw Error(ErrorCode::kCrossedBounds,
                  "lower[" + std::to_string(i) + "] = " + std::to_string(l) +
                      " exceeds upper = " + std::to_string(u),
                  i);
    }
  }
}

SaddleForm to_saddle(const LpProblem& p) {
  validate(p);
  SaddleForm s;
  s.k_matrix = SparseMatrix::VStack(p.ineq_matrix, p.eq_matrix);
  s.q = p.ineq_rhs;
  s.q.insert(s.q.end(), p.eq_rhs.begin(), p.eq_rhs.end());
  s.m1 = p.ineq_matrix.nrows();
  s.objective = p.objective;
  s.lower = p.lower;
  s.upper = p.upper;
  s.objective_constant = p.objective_constant;
  return s;
}

double lagrangian(const SaddleForm& s, std::span<const double> x,
                  std::span<const double> y) {
  const Vector kx = spmv(s.k_matrix, x);
  return dot(s.objective, x) - dot(y, kx) + dot(s.q, y);
}

LpProblem make_problem(Vector c, SparseMatrix a, Vector b, SparseMatrix g,
                       Vector h, Vector lower, Vector upper,
                       std::string name) {
  LpProblem p;
  p.objective = std::move(c);
  p.eq_matrix = std::move(a);
  p.eq_rhs = std::move(b);
  p.ineq_matrix = std::move(g);
  p.ineq_rhs = std::move(h);
  p.lower = std::move(lower);
  p.upper = std::move(upper);
  p.name = std::move(name);
  validate(p);
  return p;
}

}  // namespace fohorse
