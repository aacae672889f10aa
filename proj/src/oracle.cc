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

#include "fohorse/oracle.h"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "fohorse/status.h"

namespace fohorse {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr Index kMaxSize = 24;
constexpr double kMaxBases = 2e7;
constexpr double kFeasTol = 1e-9;
constexpr double kRayTol = 1e-9;

// min c^T x  s.t.  a x = b,  g x >= h.
struct DenseLp {
  MatrixXd a;
  VectorXd b;
  MatrixXd g;
  VectorXd h;
  VectorXd c;

  Index n() const { return c.size(); }

  void AddInequality(const VectorXd& row, double rhs) {
    g.conservativeResize(g.rows() + 1, n());
    g.row(g.rows() - 1) = row.transpose();
    h.conservativeResize(h.size() + 1);
    h(h.size() - 1) = rhs;
  }
  void AddEquality(const VectorXd& row, double rhs) {
    a.conservativeResize(a.rows() + 1, n());
    a.row(a.rows() - 1) = row.transpose();
    b.conservativeResize(b.size() + 1);
    b(b.size() - 1) = rhs;
  }
  // Adds lo <= x_j <= hi, skipping infinite sides; lo == hi is an equality.
  void AddBounds(Index j, double lo, double hi) {
    VectorXd e = VectorXd::Zero(n());
    e(j) = 1.0;
    if (std::isfinite(lo) && lo == hi) {
      AddEquality(e, lo);
      return;
    }
    if (std::isfinite(lo)) AddInequality(e, lo);
    if (std::isfinite(hi)) AddInequality(-e, -hi);
  }
};

DenseLp EmptyLp(Index n) {
  DenseLp lp;
  lp.a.resize(0, n);
  lp.g.resize(0, n);
  lp.b.resize(0);
  lp.h.resize(0);
  lp.c = VectorXd::Zero(n);
  return lp;
}

MatrixXd ToDense(const SparseMatrix& m) {
  MatrixXd d = MatrixXd::Zero(m.nrows(), m.ncols());
  for (const Triplet& t : m.triplets()) d(t.row, t.col) = t.value;
  return d;
}

double Binomial(Index p, Index k) {
  if (k < 0 || k > p) return 0.0;
  double result = 1.0;
  for (Index i = 1; i <= k; ++i) {
    result *= static_cast<double>(p - k + i) / static_cast<double>(i);
  }
  return result;
}

bool RowSatisfied(double lhs, double rhs, double row_l1, double x_inf,
                  bool equality) {
  const double tol = kFeasTol * (1.0 + std::abs(rhs) + row_l1 * x_inf);
  return equality ? std::abs(lhs - rhs) <= tol : lhs >= rhs - tol;
}

bool Feasible(const DenseLp& lp, const VectorXd& x) {
  const double x_inf = x.size() ? x.cwiseAbs().maxCoeff() : 0.0;
  for (Index i = 0; i < lp.a.rows(); ++i) {
    if (!RowSatisfied(lp.a.row(i).dot(x), lp.b(i), lp.a.row(i).lpNorm<1>(),
                      x_inf, true)) {
      return false;
    }
  }
  for (Index i = 0; i < lp.g.rows(); ++i) {
    if (!RowSatisfied(lp.g.row(i).dot(x), lp.h(i), lp.g.row(i).lpNorm<1>(),
                      x_inf, false)) {
      return false;
    }
  }
  return true;
}

struct VertexResult {
  bool found = false;
  VectorXd x;
  double objective = std::numeric_limits<double>::infinity();
};

// Best basic feasible solution, or the first one found when
// `first_feasible` is set. The polyhedron must be pointed.
VertexResult BestVertex(const DenseLp& lp, bool first_feasible = false) {
  const Index n = lp.n();
  VertexResult best;
  if (n == 0) {
    best.x = VectorXd::Zero(0);
    best.found = Feasible(lp, best.x);
    best.objective = 0.0;
    return best;
  }
  // Independent equality rows.
  std::vector<Index> eq_rows;
  if (lp.a.rows() > 0) {
    Eigen::ColPivHouseholderQR<MatrixXd> qr(lp.a.transpose());
    for (Index i = 0; i < qr.rank(); ++i) {
      eq_rows.push_back(qr.colsPermutation().indices()(i));
    }
  }
  const Index r = static_cast<Index>(eq_rows.size());
  const Index k = n - r;
  const Index p = lp.g.rows();
  if (k > p) return best;
  if (Binomial(p, k) > kMaxBases) {
    throw Error(ErrorCode::kTooLarge, "too many bases to enumerate");
  }

  MatrixXd m(n, n);
  VectorXd rhs(n);
  for (Index i = 0; i < r; ++i) {
    m.row(i) = lp.a.row(eq_rows[static_cast<size_t>(i)]);
    rhs(i) = lp.b(eq_rows[static_cast<size_t>(i)]);
  }
  std::vector<Index> pick(static_cast<size_t>(k));
  for (Index i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i;
  while (true) {
    for (Index i = 0; i < k; ++i) {
      m.row(r + i) = lp.g.row(pick[static_cast<size_t>(i)]);
      rhs(r + i) = lp.h(pick[static_cast<size_t>(i)]);
    }
    Eigen::FullPivLU<MatrixXd> lu(m);
    if (lu.isInvertible()) {
      const VectorXd x = lu.solve(rhs);
      if (Feasible(lp, x)) {
        const double objective = lp.c.dot(x);
        if (!best.found ||
            objective < best.objective - 1e-12 * (1.0 + std::abs(best.objective))) {
          best.found = true;
          best.x = x;
          best.objective = objective;
          if (first_feasible) return best;
        }
      }
    }
    // Next combination in lexicographic order.
    Index i = k - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == p - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<size_t>(i)];
    for (Index j = i + 1; j < k; ++j) {
      pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return best;
}

void CheckSize(const LpProblem& p) {
  validate(p);
  const Index size = p.num_variables() + p.num_eq_rows() + p.num_ineq_rows();
  if (size > kMaxSize) {
    throw Error(ErrorCode::kTooLarge,
                "n + rows = " + std::to_string(size) + " exceeds " +
                    std::to_string(kMaxSize));
  }
}

Vector ToVector(const VectorXd& v) { return Vector(v.data(), v.data() + v.size()); }

// Euclidean projection of `point` onto {a v = b, g v >= h}. The projection
// is the projection onto the affine hull of the face that contains it, so
// the nearest feasible candidate over all active subsets is exact.
std::optional<VectorXd> Project(const DenseLp& poly, const VectorXd& point) {
  const Index d = point.size();
  const Index p = poly.g.rows();
  if (p > 20) throw Error(ErrorCode::kTooLarge, "too many inequalities to project");
  std::optional<VectorXd> best;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
    const Index active = std::popcount(mask);
    if (active > d) continue;
    MatrixXd m(poly.a.rows() + active, d);
    VectorXd rhs(m.rows());
    m.topRows(poly.a.rows()) = poly.a;
    rhs.head(poly.a.rows()) = poly.b;
    Index row = poly.a.rows();
    for (Index i = 0; i < p; ++i) {
      if (!(mask >> i & 1u)) continue;
      m.row(row) = poly.g.row(i);
      rhs(row++) = poly.h(i);
    }
    VectorXd v = point;
    if (m.rows() > 0) {
      Eigen::CompleteOrthogonalDecomposition<MatrixXd> cod(m);
      v += cod.solve(rhs - m * point);
    }
    if (!Feasible(poly, v)) continue;
    const double dist = (v - point).norm();
    if (dist < best_dist) {
      best_dist = dist;
      best = v;
    }
  }
  return best;
}

}  // namespace

OracleSolution enumerate_vertices_solve(const LpProblem& p) {
  CheckSize(p);
  const Index n = p.num_variables();
  const MatrixXd a = ToDense(p.eq_matrix);
  const MatrixXd g = ToDense(p.ineq_matrix);

  // Free variables are split as x_j = x+_j - x-_j so the feasible set is
  // pointed.
  std::vector<std::pair<Index, double>> columns;  // (original j, sign)
  for (Index j = 0; j < n; ++j) {
    const bool is_free = !std::isfinite(p.lower[static_cast<size_t>(j)]) &&
                         !std::isfinite(p.upper[static_cast<size_t>(j)]);
    columns.emplace_back(j, 1.0);
    if (is_free) columns.emplace_back(j, -1.0);
  }
  const Index ns = static_cast<Index>(columns.size());
  DenseLp lp = EmptyLp(ns);
  MatrixXd expand = MatrixXd::Zero(n, ns);
  for (Index s = 0; s < ns; ++s) {
    expand(columns[static_cast<size_t>(s)].first, s) =
        columns[static_cast<size_t>(s)].second;
  }
  lp.c = expand.transpose() * Eigen::Map<const VectorXd>(p.objective.data(), n);
  for (Index i = 0; i < a.rows(); ++i) {
    lp.AddEquality((a.row(i) * expand).transpose(), p.eq_rhs[static_cast<size_t>(i)]);
  }
  for (Index i = 0; i < g.rows(); ++i) {
    lp.AddInequality((g.row(i) * expand).transpose(),
                     p.ineq_rhs[static_cast<size_t>(i)]);
  }
  for (Index s = 0; s < ns; ++s) {
    const auto [j, sign] = columns[static_cast<size_t>(s)];
    const double l = p.lower[static_cast<size_t>(j)];
    const double u = p.upper[static_cast<size_t>(j)];
    if (!std::isfinite(l) && !std::isfinite(u)) {
      lp.AddBounds(s, 0.0, std::numeric_limits<double>::infinity());
    } else {
      lp.AddBounds(s, l, u);
    }
  }

  OracleSolution solution;
  const VertexResult vertex = BestVertex(lp);
  if (!vertex.found) {
    solution.status = OracleStatus::kInfeasible;
    if (auto ray = find_farkas_ray(p)) solution.ray = *ray;
    return solution;
  }
  const VectorXd x = expand * vertex.x;
  solution.x = ToVector(x);
  solution.objective = vertex.objective + p.objective_constant;
  if (auto ray = find_recession_ray(p)) {
    solution.status = OracleStatus::kUnbounded;
    solution.ray = *ray;
    return solution;
  }
  solution.status = OracleStatus::kOptimal;

  const double x_inf = x.size() ? x.cwiseAbs().maxCoeff() : 0.0;
  const Index m1 = p.num_ineq_rows();
  for (Index i = 0; i < m1; ++i) {
    const double rhs = p.ineq_rhs[static_cast<size_t>(i)];
    const double tol = kFeasTol * (1.0 + std::abs(rhs) + g.row(i).lpNorm<1>() * x_inf);
    if (std::abs(g.row(i).dot(x) - rhs) <= tol) solution.active_set.push_back(i);
  }
  for (Index j = 0; j < n; ++j) {
    const double l = p.lower[static_cast<size_t>(j)];
    if (std::isfinite(l) && std::abs(x(j) - l) <= kFeasTol * (1.0 + std::abs(l))) {
      solution.active_set.push_back(m1 + j);
    }
  }
  for (Index j = 0; j < n; ++j) {
    const double u = p.upper[static_cast<size_t>(j)];
    if (std::isfinite(u) && std::abs(x(j) - u) <= kFeasTol * (1.0 + std::abs(u))) {
      solution.active_set.push_back(m1 + n + j);
    }
  }
  return solution;
}

std::optional<Vector> find_recession_ray(const LpProblem& p) {
  CheckSize(p);
  const Index n = p.num_variables();
  DenseLp lp = EmptyLp(n);
  lp.c = Eigen::Map<const VectorXd>(p.objective.data(), n);
  const MatrixXd a = ToDense(p.eq_matrix);
  const MatrixXd g = ToDense(p.ineq_matrix);
  for (Index i = 0; i < a.rows(); ++i) lp.AddEquality(a.row(i).transpose(), 0.0);
  for (Index i = 0; i < g.rows(); ++i) lp.AddInequality(g.row(i).transpose(), 0.0);
  // Normalize within the box [-1, 1].
  for (Index j = 0; j < n; ++j) {
    const double lo = std::isfinite(p.lower[static_cast<size_t>(j)]) ? 0.0 : -1.0;
    const double hi = std::isfinite(p.upper[static_cast<size_t>(j)]) ? 0.0 : 1.0;
    lp.AddBounds(j, lo, hi);
  }
  const VertexResult vertex = BestVertex(lp);
  if (!vertex.found || !(vertex.objective < -kRayTol)) return std::nullopt;
  return ToVector(vertex.x);
}

std::optional<Vector> find_farkas_ray(const LpProblem& p) {
  CheckSize(p);
  const Index n = p.num_variables();
  const Index m1 = p.num_ineq_rows();
  const Index m = m1 + p.num_eq_rows();
  // Homogeneous dual: d in R^m, lambda = plus - minus with plus only on
  // finite lower bounds and minus only on finite upper bounds;
  // K^T d + lambda = 0, d_G >= 0, maximize q^T d + l^T plus - u^T minus.
  std::vector<std::pair<Index, double>> lambda_columns;  // (j, +1 or -1)
  for (Index j = 0; j < n; ++j) {
    if (std::isfinite(p.lower[static_cast<size_t>(j)])) lambda_columns.emplace_back(j, 1.0);
    if (std::isfinite(p.upper[static_cast<size_t>(j)])) lambda_columns.emplace_back(j, -1.0);
  }
  const Index nv = m + static_cast<Index>(lambda_columns.size());
  DenseLp lp = EmptyLp(nv);
  MatrixXd k(m, n);
  k << ToDense(p.ineq_matrix), ToDense(p.eq_matrix);
  MatrixXd eq = MatrixXd::Zero(n, nv);
  eq.leftCols(m) = k.transpose();
  for (size_t s = 0; s < lambda_columns.size(); ++s) {
    const auto [j, sign] = lambda_columns[s];
    eq(j, m + static_cast<Index>(s)) = sign;
    const double bound = sign > 0 ? p.lower[static_cast<size_t>(j)]
                                  : p.upper[static_cast<size_t>(j)];
    lp.c(m + static_cast<Index>(s)) = -sign * bound;
  }
  for (Index i = 0; i < m; ++i) {
    lp.c(i) = -(i < m1 ? p.ineq_rhs[static_cast<size_t>(i)]
                       : p.eq_rhs[static_cast<size_t>(i - m1)]);
  }
  for (Index j = 0; j < n; ++j) lp.AddEquality(eq.row(j).transpose(), 0.0);
  for (Index i = 0; i < nv; ++i) {
    const bool nonnegative = i < m1 || i >= m;
    lp.AddBounds(i, nonnegative ? 0.0 : -1.0, 1.0);
  }
  const VertexResult vertex = BestVertex(lp);
  if (!vertex.found || !(-vertex.objective > kRayTol)) return std::nullopt;
  Vector y(static_cast<size_t>(m));
  for (Index i = 0; i < m; ++i) y[static_cast<size_t>(i)] = -vertex.x(i);
  return y;
}

std::optional<Vector> recover_dual(const LpProblem& p, const Vector& x_in) {
  CheckSize(p);
  const Index n = p.num_variables();
  const Index m1 = p.num_ineq_rows();
  const Index m2 = p.num_eq_rows();
  const Index m = m1 + m2;
  const MatrixXd g = ToDense(p.ineq_matrix);
  const MatrixXd a = ToDense(p.eq_matrix);
  const VectorXd x = Eigen::Map<const VectorXd>(x_in.data(), n);
  const double x_inf = n ? x.cwiseAbs().maxCoeff() : 0.0;

  // Variables: y_i >= 0 for tight G rows, y_i = y+ - y- for A rows, and
  // lambda parts for bounds that are tight at x.
  struct Column {
    Index index;   // dual row index, or variable j for lambda columns
    double sign;
    bool is_lambda;
  };
  std::vector<Column> columns;
  for (Index i = 0; i < m1; ++i) {
    const double rhs = p.ineq_rhs[static_cast<size_t>(i)];
    const double tol = 1e-7 * (1.0 + std::abs(rhs) + g.row(i).lpNorm<1>() * x_inf);
    if (std::abs(g.row(i).dot(x) - rhs) <= tol) columns.push_back({i, 1.0, false});
  }
  for (Index i = 0; i < m2; ++i) {
    columns.push_back({m1 + i, 1.0, false});
    columns.push_back({m1 + i, -1.0, false});
  }
  for (Index j = 0; j < n; ++j) {
    const double l = p.lower[static_cast<size_t>(j)];
    const double u = p.upper[static_cast<size_t>(j)];
    if (std::isfinite(l) && std::abs(x(j) - l) <= 1e-7 * (1.0 + std::abs(l))) {
      columns.push_back({j, 1.0, true});
    }
    if (std::isfinite(u) && std::abs(x(j) - u) <= 1e-7 * (1.0 + std::abs(u))) {
      columns.push_back({j, -1.0, true});
    }
  }
  const Index nv = static_cast<Index>(columns.size());
  MatrixXd k(m, n);
  k << g, a;
  DenseLp lp = EmptyLp(nv);
  MatrixXd eq = MatrixXd::Zero(n, nv);
  for (Index s = 0; s < nv; ++s) {
    const Column& c = columns[static_cast<size_t>(s)];
    if (c.is_lambda) {
      eq(c.index, s) = c.sign;
    } else {
      eq.col(s) = c.sign * k.row(c.index).transpose();
    }
  }
  for (Index j = 0; j < n; ++j) {
    lp.AddEquality(eq.row(j).transpose(), p.objective[static_cast<size_t>(j)]);
  }
  for (Index s = 0; s < nv; ++s) {
    lp.AddBounds(s, 0.0, std::numeric_limits<double>::infinity());
  }
  const VertexResult vertex = BestVertex(lp, /*first_feasible=*/true);
  if (!vertex.found) return std::nullopt;
  Vector y(static_cast<size_t>(m), 0.0);
  for (Index s = 0; s < nv; ++s) {
    const Column& c = columns[static_cast<size_t>(s)];
    if (!c.is_lambda) y[static_cast<size_t>(c.index)] += c.sign * vertex.x(s);
  }
  return y;
}

double distance_to_optimal_set(const LpProblem& p, const Vector& x_in,
                               const Vector& y_in) {
  const OracleSolution sol = enumerate_vertices_solve(p);
  if (sol.status != OracleStatus::kOptimal) {
    throw Error(ErrorCode::kInvalidArgument, "instance has no optimal solution");
  }
  const Index n = p.num_variables();
  const Index m1 = p.num_ineq_rows();
  const Index m = m1 + p.num_eq_rows();
  if (static_cast<Index>(x_in.size()) != n || static_cast<Index>(y_in.size()) != m) {
    throw Error(ErrorCode::kDimensionMismatch, "point does not match the instance");
  }
  const double value = sol.objective - p.objective_constant;
  const MatrixXd a = ToDense(p.eq_matrix);
  const MatrixXd g = ToDense(p.ineq_matrix);
  const VectorXd c = Eigen::Map<const VectorXd>(p.objective.data(), n);

  // Primal face: feasible and c^T x <= value.
  DenseLp primal = EmptyLp(n);
  for (Index i = 0; i < a.rows(); ++i) {
    primal.AddEquality(a.row(i).transpose(), p.eq_rhs[static_cast<size_t>(i)]);
  }
  for (Index i = 0; i < g.rows(); ++i) {
    primal.AddInequality(g.row(i).transpose(), p.ineq_rhs[static_cast<size_t>(i)]);
  }
  for (Index j = 0; j < n; ++j) {
    primal.AddBounds(j, p.lower[static_cast<size_t>(j)], p.upper[static_cast<size_t>(j)]);
  }
  primal.AddInequality(-c, -value);

  // Dual face in y alone: the reduced cost r = c - K^T y must be sign
  // feasible, and each one-sided or fixed bound adds bound * r_j to the
  // dual objective, which must reach `value`.
  MatrixXd k(m, n);
  k << g, a;
  DenseLp dual = EmptyLp(m);
  for (Index i = 0; i < m1; ++i) {
    VectorXd e = VectorXd::Zero(m);
    e(i) = 1.0;
    dual.AddInequality(e, 0.0);
  }
  VectorXd objective(m);
  for (Index i = 0; i < m; ++i) {
    objective(i) = i < m1 ? p.ineq_rhs[static_cast<size_t>(i)]
                          : p.eq_rhs[static_cast<size_t>(i - m1)];
  }
  double offset = 0.0;
  for (Index j = 0; j < n; ++j) {
    const double l = p.lower[static_cast<size_t>(j)];
    const double u = p.upper[static_cast<size_t>(j)];
    const VectorXd col = k.col(j);
    const bool has_l = std::isfinite(l);
    const bool has_u = std::isfinite(u);
    if (has_l && has_u && l != u) {
      throw Error(ErrorCode::kInvalidArgument,
                  "variable " + std::to_string(j) + " has two distinct finite bounds", j);
    }
    if (!has_l && !has_u) {
      dual.AddEquality(col, c(j));
      continue;
    }
    if (has_l && !has_u) dual.AddInequality(-col, -c(j));
    if (has_u && !has_l) dual.AddInequality(col, c(j));
    const double bound = has_l ? l : u;
    objective -= bound * col;
    offset += bound * c(j);
  }
  dual.AddInequality(objective, value - offset);

  const auto px = Project(primal, Eigen::Map<const VectorXd>(x_in.data(), n));
  const auto py = Project(dual, Eigen::Map<const VectorXd>(y_in.data(), m));
  if (!px || !py) {
    throw Error(ErrorCode::kInvalidArgument, "optimal face projection failed");
  }
  const double dx = (*px - Eigen::Map<const VectorXd>(x_in.data(), n)).norm();
  const double dy = (*py - Eigen::Map<const VectorXd>(y_in.data(), m)).norm();
  return std::hypot(dx, dy);
}

LpProblem random_feasible_lp(std::uint64_t seed, Index m, Index n,
                             double density) {
  if (m < 1 || n < 1 || !(density > 0.0 && density <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "random_feasible_lp needs m, n >= 1 and density in (0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);

  MatrixXd a = MatrixXd::Zero(m, n);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (unit(rng) < density) a(i, j) = normal(rng);
    }
  }
  // Every row and column gets at least one entry.
  std::uniform_int_distribution<Index> pick_col(0, n - 1);
  std::uniform_int_distribution<Index> pick_row(0, m - 1);
  for (Index i = 0; i < m; ++i) {
    if (a.row(i).cwiseAbs().maxCoeff() == 0.0) a(i, pick_col(rng)) = normal(rng);
  }
  for (Index j = 0; j < n; ++j) {
    if (a.col(j).cwiseAbs().maxCoeff() == 0.0) a(pick_row(rng), j) = normal(rng);
  }
  VectorXd x_bar(n);
  for (Index j = 0; j < n; ++j) x_bar(j) = unit(rng) < 0.5 ? 0.0 : unit(rng);
  VectorXd y_bar(m);
  for (Index i = 0; i < m; ++i) y_bar(i) = normal(rng);
  VectorXd s(n);
  for (Index j = 0; j < n; ++j) s(j) = unit(rng);
  const VectorXd b = a * x_bar;
  const VectorXd c = a.transpose() * y_bar + s;

  std::vector<double> dense(a.size());
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) dense[static_cast<size_t>(i * n + j)] = a(i, j);
  }
  return make_problem(ToVector(c), SparseMatrix::FromDense(m, n, dense),
                      ToVector(b), SparseMatrix(0, n), {},
                      Vector(static_cast<size_t>(n), 0.0),
                      Vector(static_cast<size_t>(n),
                             std::numeric_limits<double>::infinity()),
                      "random_" + std::to_string(seed));
}

LpProblem make_infeasible_fixture(FixtureKind kind) {
  const double inf = std::numeric_limits<double>::infinity();
  switch (kind) {
    case FixtureKind::kPrimal:
      return make_problem({0.0}, SparseMatrix::FromDense(2, 1, std::vector{1.0, 1.0}),
                          {1.0, 2.0}, SparseMatrix(0, 1), {}, {0.0}, {inf},
                          "primal_infeasible");
    case FixtureKind::kDual:
      return make_problem({-1.0}, SparseMatrix(0, 1), {}, SparseMatrix(0, 1), {},
                          {0.0}, {inf}, "dual_infeasible");
    case FixtureKind::kBoth:
      return make_problem(
          {0.0, -1.0},
          SparseMatrix::FromDense(2, 2, std::vector{1.0, 0.0, 1.0, 0.0}),
          {1.0, 2.0}, SparseMatrix(0, 2), {}, {0.0, 0.0}, {inf, inf},
          "both_infeasible");
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown fixture kind");
}

}  // namespace fohorse
