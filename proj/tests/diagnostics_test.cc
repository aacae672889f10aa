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
#include <random>
#include <vector>

#include "doctest.h"
#include "fohorse/diagnostics.h"
#include "fohorse/oracle.h"
#include "fohorse/status.h"
#include "test_util.h"

namespace fohorse {
namespace {

using testing::kInf;

TEST_CASE("reduced_costs keep only the parts matching finite bounds") {
  CHECK(reduced_costs(to_saddle(testing::ToyA()), Vector{1.5}) == Vector{0.5, 0.0});
  CHECK(reduced_costs(to_saddle(testing::ToyB()), Vector{1.0}) == Vector{1.0, 0.0});
  LpProblem boxed = testing::ToyA();
  boxed.lower = {-kInf, 0.0};
  boxed.upper = {1.0, 1.0};
  // r = (2 - 4, 3 - 8) = (-2, -5).
  CHECK(reduced_costs(to_saddle(boxed), Vector{4.0}) == Vector{-2.0, -5.0});
  CHECK(reduced_costs(to_saddle(boxed), Vector{0.0}) == Vector{0.0, 3.0});
}

TEST_CASE("kkt_error examples") {
  const LpProblem p = testing::ToyA();
  const KktComponents opt = kkt_error(p, Vector{0.0, 0.5}, Vector{1.5});
  CHECK(opt.primal_residual == 0.0);
  CHECK(opt.dual_residual == 0.0);
  CHECK(opt.gap_abs == 0.0);
  CHECK(opt.primal_objective == 1.5);
  CHECK(opt.dual_objective == 1.5);
  CHECK(opt.total() == 0.0);

  const KktComponents off = kkt_error(p, Vector{1.0, 0.0}, Vector{0.0});
  CHECK(off.primal_residual == 0.0);
  CHECK(off.dual_residual == 0.0);
  CHECK(off.gap_abs == 2.0);
  CHECK(off.total() == 2.0);

  const KktComponents infeasible = kkt_error(p, Vector{0.0, 0.0}, Vector{2.0});
  CHECK(infeasible.primal_residual == 1.0);
  // r = (0, -1) with x2 >= 0 only: the negative part is a dual violation.
  CHECK(infeasible.dual_residual == 1.0);

  LpProblem shifted = p;
  shifted.objective_constant = 10.0;
  const KktComponents c = kkt_error(shifted, Vector{1.0, 0.0}, Vector{0.0});
  CHECK(c.primal_objective == 12.0);
  CHECK(c.dual_objective == 10.0);
  CHECK(c.gap_abs == 2.0);
}

TEST_CASE("kkt_error on a problem with no rows") {
  const LpProblem p = make_problem({0.0, 0.0}, SparseMatrix(0, 2), {}, SparseMatrix(0, 2),
                                   {}, {0.0, 0.0}, {kInf, kInf});
  CHECK(kkt_error(p, Vector{0.0, 0.0}, Vector{}).total() == 0.0);
}

TEST_CASE("inequality rows only count violations") {
  const LpProblem p = make_problem({1.0}, SparseMatrix(0, 1), {},
                                   SparseMatrix::FromDense(1, 1, std::vector{1.0}), {1.0},
                                   {0.0}, {kInf});
  CHECK(kkt_error(p, Vector{3.0}, Vector{0.0}).primal_residual == 0.0);
  CHECK(kkt_error(p, Vector{0.25}, Vector{0.0}).primal_residual == 0.75);
}

TEST_CASE("relative termination is non-strict") {
  const ProblemNorms norms{1.0, 3.0};
  KktComponents k;
  k.primal_residual = 0.5 * 2.0;
  k.dual_residual = 0.5 * 4.0;
  k.primal_objective = 1.0;
  k.dual_objective = 1.0;
  k.gap_abs = 0.5 * 3.0;
  CHECK(check_relative_termination(k, norms, 0.5));
  k.primal_residual = std::nextafter(1.0, 2.0);
  CHECK_FALSE(check_relative_termination(k, norms, 0.5));
  k.primal_residual = 1.0;
  k.gap_abs = std::nextafter(1.5, 2.0);
  CHECK_FALSE(check_relative_termination(k, norms, 0.5));

  // The constant is not part of the relative scale.
  KktComponents shifted = k;
  shifted.gap_abs = 1.5;
  shifted.objective_constant = 100.0;
  shifted.primal_objective = 101.0;
  shifted.dual_objective = 101.0;
  CHECK(check_relative_termination(shifted, norms, 0.5));
  shifted.gap_abs = 1.6;
  CHECK_FALSE(check_relative_termination(shifted, norms, 0.5));
}

TEST_CASE("extract_candidates examples") {
  const Iterate curr{{2.0}, {2.0}}, prev{{1.5}, {1.0}}, start{{0.0}, {0.0}};
  const auto c = extract_candidates(curr, prev, start, 2, ScalingInfo::Identity(1, 1));
  REQUIRE(c.size() == 2);
  CHECK(c[0].kind == CandidateKind::kDifference);
  CHECK(c[0].ray == Iterate{{0.5}, {1.0}});
  CHECK(c[1].kind == CandidateKind::kNormalized);
  CHECK(c[1].ray == Iterate{{1.0}, {1.0}});

  const auto scaled = extract_candidates(curr, prev, start, 2, ScalingInfo{{3.0}, {2.0}});
  CHECK(scaled[1].ray == Iterate{{2.0}, {3.0}});

  bool threw = false;
  try {
    extract_candidates(curr, prev, start, 0, ScalingInfo::Identity(1, 1));
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::kInvalidArgument;
  }
  CHECK(threw);
}

TEST_CASE("validate_primal_infeasibility examples") {
  const LpProblem p = make_infeasible_fixture(FixtureKind::kPrimal);
  CHECK(validate_primal_infeasibility(p, Vector{1.0, -1.0}, 1e-9));
  CHECK(validate_primal_infeasibility(p, Vector{2.0, -2.0}, 1e-9));
  CHECK_FALSE(validate_primal_infeasibility(p, Vector{-1.0, 1.0}, 1e-9));
  CHECK_FALSE(validate_primal_infeasibility(p, Vector{0.0, 0.0}, 1e-9));
  for (double y : {-1.0, 1.0, 0.0}) {
    CHECK_FALSE(validate_primal_infeasibility(testing::ToyA(), Vector{y}, 1e-9));
  }
}

TEST_CASE("validate_primal_infeasibility is the standard-form Farkas set") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> small(-2, 2);
  int accepted = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const Index m = 1 + trial % 3, n = 1 + trial % 4;
    std::vector<double> dense(static_cast<size_t>(m * n));
    for (double& e : dense) e = small(rng);
    Vector b(static_cast<size_t>(m)), y(static_cast<size_t>(m));
    for (double& e : b) e = small(rng);
    for (double& e : y) e = small(rng);
    const SparseMatrix a = SparseMatrix::FromDense(m, n, dense);
    const LpProblem p = make_problem(Vector(static_cast<size_t>(n), 0.0), a, b,
                                     SparseMatrix(0, n), {}, Vector(static_cast<size_t>(n), 0.0),
                                     Vector(static_cast<size_t>(n), kInf));
    const Vector aty = spmv_t(a, y);
    bool literal = dot(b, y) < 0.0;
    for (double v : aty) literal = literal && v >= 0.0;
    CHECK(validate_primal_infeasibility(p, y, 1e-12) == literal);
    accepted += literal ? 1 : 0;
  }
  CHECK(accepted > 50);
}

TEST_CASE("validate_dual_infeasibility examples") {
  const LpProblem d = make_infeasible_fixture(FixtureKind::kDual);
  CHECK(validate_dual_infeasibility(d, Vector{1.0}, 1e-9));
  CHECK_FALSE(validate_dual_infeasibility(d, Vector{-1.0}, 1e-9));
  CHECK_FALSE(validate_dual_infeasibility(d, Vector{0.0}, 1e-9));
  // Improving, but x1 has a finite lower bound.
  CHECK_FALSE(validate_dual_infeasibility(testing::ToyB(), Vector{-2.0, 1.0}, 1e-9));
  CHECK_FALSE(validate_dual_infeasibility(testing::ToyB(), Vector{-1.0, 0.0}, 1e-9));
  // Feasible direction that does not improve.
  CHECK_FALSE(validate_dual_infeasibility(testing::ToyB(), Vector{2.0, -1.0}, 1e-9));
}

TEST_CASE("oracle optima have zero KKT error") {
  for (int seed = 0; seed < 30; ++seed) {
    CAPTURE(seed);
    const LpProblem p = testing::SuiteInstance(seed);
    const OracleSolution o = enumerate_vertices_solve(p);
    REQUIRE(o.status == OracleStatus::kOptimal);
    const std::optional<Vector> y = recover_dual(p, o.x);
    REQUIRE(y.has_value());
    CHECK(kkt_error(p, o.x, *y).total() <= 1e-9);
  }
}

TEST_CASE("feasible bounded instances admit no certificate") {
  std::mt19937_64 rng(59);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int seed = 0; seed < 10; ++seed) {
    const LpProblem p = testing::SuiteInstance(seed);
    for (int trial = 0; trial < 500; ++trial) {
      Vector y(static_cast<size_t>(p.num_eq_rows()));
      for (double& e : y) e = normal(rng);
      CHECK_FALSE(validate_primal_infeasibility(p, y, 1e-9));
      Vector x(static_cast<size_t>(p.num_variables()));
      for (double& e : x) e = std::abs(normal(rng));
      CHECK_FALSE(validate_dual_infeasibility(p, x, 1e-9));
    }
  }
}

}  // namespace
}  // namespace fohorse
