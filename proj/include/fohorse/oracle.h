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

// Reference LP solver for tiny instances, by exhaustive enumeration of basic
// solutions, and seeded instance generators.
//
// The enumerator works on dense copies of the data and never calls into the
// solver's kernels, scaling or diagnostics.

#ifndef FOHORSE_ORACLE_H_
#define FOHORSE_ORACLE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "fohorse/problem.h"

namespace fohorse {

enum class OracleStatus { kOptimal, kInfeasible, kUnbounded };

struct OracleSolution {
  OracleStatus status = OracleStatus::kInfeasible;
  // Optimal: the best vertex. Unbounded: some feasible vertex.
  Vector x;
  double objective = 0.0;  // c^T x + constant
  // Tight inequalities at x: G row i is i, lower bound j is m1 + j, upper
  // bound j is m1 + n + j.
  std::vector<Index> active_set;
  // Unbounded: recession direction with c^T d < 0. Infeasible: Farkas ray
  // (see find_farkas_ray), when the search found one.
  Vector ray;
};

// Requires n + rows(A) + rows(G) <= 24, else throws kTooLarge. Singular
// bases are skipped.
OracleSolution enumerate_vertices_solve(const LpProblem& problem);

// A direction d with A d = 0, G d >= 0, d_j >= 0 where l_j is finite,
// d_j <= 0 where u_j is finite and c^T d < 0, if one exists.
std::optional<Vector> find_recession_ray(const LpProblem& problem);

// A ray y (G rows first, then A rows) certifying primal infeasibility in the
// convention of validate_primal_infeasibility, if one exists.
std::optional<Vector> find_farkas_ray(const LpProblem& problem);

// A dual solution y (G rows first, then A rows) for the primal optimum x,
// found among vertices of the complementary-slackness system.
std::optional<Vector> recover_dual(const LpProblem& problem, const Vector& x);

// Euclidean distance from (x, y) to the set of primal-dual optimal pairs,
// by projection onto the primal and dual optimal faces. The instance must be
// Optimal under the oracle and have no variable with two distinct finite
// bounds; throws kInvalidArgument otherwise.
double distance_to_optimal_set(const LpProblem& problem, const Vector& x,
                               const Vector& y);

// Standard-form instance min c^T x, A x = b, x >= 0 that is feasible and
// bounded by construction. Every row and column of A has an entry.
LpProblem random_feasible_lp(std::uint64_t seed, Index m, Index n,
                             double density);

enum class FixtureKind { kPrimal, kDual, kBoth };

// kPrimal: x1 = 1 and x1 = 2 with x1 >= 0, c = 0.
// kDual:   min -x1 with x1 >= 0 and no rows.
// kBoth:   the kPrimal rows on x1 plus x2 >= 0 with cost -1 that appears
//          in no row, so both the primal and the dual are infeasible.
LpProblem make_infeasible_fixture(FixtureKind kind);

}  // namespace fohorse

#endif  // FOHORSE_ORACLE_H_
