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

// The LP data model. Problems are accepted in the general form
//
//   minimize    c^T x + objective_constant
//   subject to  A x = b,  G x >= h,  l <= x <= u,
//
// with l_i in R u {-inf} and u_i in R u {+inf}. The solver works on the
// saddle-point form
//
//   min_{x in X} max_{y in Y}  L(x, y) = c^T x - y^T K x + q^T y,
//
// with K = [G; A], q = (h; b), X = {l <= x <= u} and Y = {y : y_i >= 0 for
// the first m1 = rows(G) components}. Inequality rows always come first.

#ifndef FOHORSE_PROBLEM_H_
#define FOHORSE_PROBLEM_H_

#include <span>
#include <string>

#include "fohorse/sparse_matrix.h"

namespace fohorse {

struct LpProblem {
  Vector objective;  // c, length n
  double objective_constant = 0.0;
  SparseMatrix eq_matrix;    // A, m2 x n
  Vector eq_rhs;             // b, length m2
  SparseMatrix ineq_matrix;  // G, m1 x n
  Vector ineq_rhs;           // h, length m1
  Vector lower;              // l, entries finite or -inf
  Vector upper;              // u, entries finite or +inf
  std::string name;

  Index num_variables() const { return static_cast<Index>(objective.size()); }
  Index num_eq_rows() const { return eq_matrix.nrows(); }
  Index num_ineq_rows() const { return ineq_matrix.nrows(); }
};

struct SaddleForm {
  SparseMatrix k_matrix;  // [G; A]
  Vector q;               // (h; b)
  Index m1 = 0;           // number of leading inequality rows
  Vector objective;
  Vector lower;
  Vector upper;
  double objective_constant = 0.0;

  Index num_variables() const { return static_cast<Index>(objective.size()); }
  Index num_rows() const { return k_matrix.nrows(); }
};

// Throws Error with kDimensionMismatch, kCrossedBounds (index = variable) or
// kNonFiniteEntry when an LpProblem invariant is violated.
void validate(const LpProblem& problem);

// Validates, then stacks G above A. Column order is preserved.
SaddleForm to_saddle(const LpProblem& problem);

// c^T x - y^T K x + q^T y (the objective constant is not included).
double lagrangian(const SaddleForm& saddle, std::span<const double> x,
                  std::span<const double> y);

// Assembles and validates an LpProblem.
LpProblem make_problem(Vector c, SparseMatrix a, Vector b, SparseMatrix g,
                       Vector h, Vector lower, Vector upper,
                       std::string name = "");

}  // namespace fohorse

#endif  // FOHORSE_PROBLEM_H_
