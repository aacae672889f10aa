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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "fohorse/diagnostics.h"
#include "fohorse/oracle.h"
#include "fohorse/status.h"
#include "test_util.h"

namespace fohorse {
namespace {

using testing::kInf;

template <typename F>
ErrorCode CodeOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kInvalidArgument;
}

TEST_CASE("toy LP optima") {
  const OracleSolution a = enumerate_vertices_solve(testing::ToyA());
  REQUIRE(a.status == OracleStatus::kOptimal);
  CHECK(a.objective == doctest::Approx(1.5));
  CHECK(a.x[0] == doctest::Approx(0.0));
  CHECK(a.x[1] == doctest::Approx(0.5));

  const OracleSolution b = enumerate_vertices_solve(testing::ToyB());
  REQUIRE(b.status == OracleStatus::kOptimal);
  CHECK(b.objective == doctest::Approx(-3.5));
  CHECK(b.x[0] == doctest::Approx(-10.0));
  CHECK(b.x[1] == doctest::Approx(5.5));
}

TEST_CASE("a box with no rows") {
  const LpProblem p = make_problem({1.0}, SparseMatrix(0, 1), {}, SparseMatrix(0, 1), {},
                                   {0.0}, {1.0});
  const OracleSolution s = enumerate_vertices_solve(p);
  REQUIRE(s.status == OracleStatus::kOptimal);
  CHECK(s.x == Vector{0.0});
  CHECK(s.objective == 0.0);
  CHECK(s.active_set == std::vector<Index>{0});
}

TEST_CASE("the objective constant is included") {
  LpProblem p = testing::ToyA();
  p.objective_constant = -4.0;
  CHECK(enumerate_vertices_solve(p).objective == doctest::Approx(-2.5));
}

TEST_CASE("fixture statuses") {
  const LpProblem primal = make_infeasible_fixture(FixtureKind::kPrimal);
  const OracleSolution p = enumerate_vertices_solve(primal);
  CHECK(p.status == OracleStatus::kInfeasible);
  REQUIRE(!p.ray.empty());
  CHECK(validate_primal_infeasibility(primal, p.ray, 1e-9));

  const LpProblem dual = make_infeasible_fixture(FixtureKind::kDual);
  const OracleSolution d = enumerate_vertices_solve(dual);
  CHECK(d.status == OracleStatus::kUnbounded);
  REQUIRE(!d.ray.empty());
  CHECK(validate_dual_infeasibility(dual, d.ray, 1e-9));

  const LpProblem both = make_infeasible_fixture(FixtureKind::kBoth);
  CHECK(enumerate_vertices_solve(both).status == OracleStatus::kInfeasible);
  const std::optional<Vector> ray = find_recession_ray(both);
  REQUIRE(ray.has_value());
  CHECK(validate_dual_infeasibility(both, *ray, 1e-9));
  CHECK(find_farkas_ray(both).has_value());
}

TEST_CASE("rays are absent on bounded feasible instances") {
  for (int seed = 0; seed < 10; ++seed) {
    const LpProblem p = testing::SuiteInstance(seed);
    CHECK_FALSE(find_recession_ray(p).has_value());
    CHECK_FALSE(find_farkas_ray(p).has_value());
  }
}

TEST_CASE("oversized instances are rejected") {
  const LpProblem big = make_problem(Vector(25, 1.0), SparseMatrix(0, 25), {},
                                     SparseMatrix(0, 25), {}, Vector(25, 0.0),
                                     Vector(25, kInf));
  CHECK(CodeOf([&] { enumerate_vertices_solve(big); }) == ErrorCode::kTooLarge);
}

TEST_CASE("random_feasible_lp is deterministic and well-formed") {
  const LpProblem a = random_feasible_lp(7, 3, 5, 0.5);
  const LpProblem b = random_feasible_lp(7, 3, 5, 0.5);
  CHECK(a.objective == b.objective);
  CHECK(a.eq_matrix == b.eq_matrix);
  CHECK(a.eq_rhs == b.eq_rhs);
  CHECK_FALSE(random_feasible_lp(8, 3, 5, 0.5).eq_matrix == a.eq_matrix);

  const LpProblem dense = random_feasible_lp(3, 4, 6, 1.0);
  CHECK(dense.eq_matrix.nnz() == 24);

  for (int seed = 0; seed < 30; ++seed) {
    const LpProblem p = testing::SuiteInstance(seed, 0.2);
    for (Index i = 0; i < p.eq_matrix.nrows(); ++i) CHECK(p.eq_matrix.row(i).size() > 0);
    for (Index j = 0; j < p.eq_matrix.ncols(); ++j) CHECK(p.eq_matrix.col(j).size() > 0);
    CHECK(p.num_ineq_rows() == 0);
    CHECK(p.lower == Vector(static_cast<size_t>(p.num_variables()), 0.0));
    CHECK(enumerate_vertices_solve(p).status == OracleStatus::kOptimal);
  }
}

TEST_CASE("optimal vertices are feasible and match the recovered dual") {
  for (int seed = 0; seed < 50; ++seed) {
    CAPTURE(seed);
    const LpProblem p = testing::SuiteInstance(seed);
    const OracleSolution s = enumerate_vertices_solve(p);
    REQUIRE(s.status == OracleStatus::kOptimal);
    const KktComponents k = kkt_error(p, s.x, Vector(static_cast<size_t>(p.num_eq_rows()), 0.0));
    CHECK(k.primal_residual <= 1e-9);
    CHECK(dot(p.objective, s.x) == doctest::Approx(s.objective));
    for (double v : s.x) CHECK(v >= -1e-12);
    const std::optional<Vector> y = recover_dual(p, s.x);
    REQUIRE(y.has_value());
    const KktComponents full = kkt_error(p, s.x, *y);
    CHECK(full.dual_residual <= 1e-9);
    CHECK(full.dual_objective == doctest::Approx(s.objective));
  }
}

TEST_CASE("distance to the optimal set") {
  const LpProblem p = testing::ToyA();
  CHECK(distance_to_optimal_set(p, Vector{0.0, 0.5}, Vector{1.5}) <= 1e-12);
  // Unique primal (0, 0.5) and dual 1.5.
  CHECK(distance_to_optimal_set(p, Vector{1.0, 0.0}, Vector{0.0}) ==
        doctest::Approx(std::sqrt(1.0 + 0.25 + 2.25)));

  for (int seed = 0; seed < 20; ++seed) {
    const LpProblem q = testing::SuiteInstance(seed);
    const OracleSolution s = enumerate_vertices_solve(q);
    const std::optional<Vector> y = recover_dual(q, s.x);
    REQUIRE(y.has_value());
    CHECK(distance_to_optimal_set(q, s.x, *y) <= 1e-9);
    Vector x = s.x;
    x[0] += 1.0;
    // One optimal pair is at distance 1, so the set is no farther.
    CHECK(distance_to_optimal_set(q, x, *y) <= 1.0 + 1e-9);
  }

  LpProblem boxed = p;
  boxed.upper = {4.0, kInf};
  CHECK(CodeOf([&] { distance_to_optimal_set(boxed, Vector{0.0, 0.5}, Vector{1.5}); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(CodeOf([&] {
          distance_to_optimal_set(make_infeasible_fixture(FixtureKind::kPrimal), Vector{0.0},
                                  Vector{0.0, 0.0});
        }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([&] { distance_to_optimal_set(p, Vector{0.0}, Vector{1.5}); }) ==
        ErrorCode::kDimensionMismatch);
}

}  // namespace
}  // namespace fohorse
