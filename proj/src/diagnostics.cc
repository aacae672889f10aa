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

#include "fohorse/diagnostics.h"

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

// Splits r into lambda according to which bounds are finite.
Vector SplitReducedCosts(const SaddleForm& s, const Vector& r) {
  Vector lambda(r.size(), 0.0);
  for (size_t j = 0; j < r.size(); ++j) {
    if (std::isfinite(s.lower[j])) lambda[j] += std::max(r[j], 0.0);
    if (std::isfinite(s.upper[j])) lambda[j] += std::min(r[j], 0.0);
  }
  return lambda;
}

// l^T lambda+ - u^T lambda-, skipping infinite bounds (their lambda part is
// zero by construction).
double BoundTerm(const SaddleForm& s, const Vector& lambda) {
  double sum = 0.0;
  for (size_t j = 0; j < lambda.size(); ++j) {
    if (lambda[j] > 0.0) {
      sum += s.lower[j] * lambda[j];
    } else if (lambda[j] < 0.0) {
      sum += s.upper[j] * lambda[j];
    }
  }
  return sum;
}

}  // namespace

double KktComponents::total() const {
  return std::sqrt(primal_residual * primal_residual +
                   dual_residual * dual_residual + gap_abs * gap_abs);
}

Vector reduced_costs(const SaddleForm& s, std::span<const double> y) {
  CheckLength(y.size(), s.num_rows(), "y");
  Vector r = spmv_t(s.k_matrix, y);
  for (size_t j = 0; j < r.size(); ++j) r[j] = s.objective[j] - r[j];
  return SplitReducedCosts(s, r);
}

KktComponents kkt_error(const SaddleForm& s, std::span<const double> x,
                        std::span<const double> y) {
  CheckLength(x.size(), s.num_variables(), "x");
  CheckLength(y.size(), s.num_rows(), "y");
  KktComponents kkt;
  kkt.objective_constant = s.objective_constant;

  const Vector kx = spmv(s.k_matrix, x);
  double primal_sq = 0.0;
  for (size_t i = 0; i < kx.size(); ++i) {
    const double violation = static_cast<Index>(i) < s.m1
                                 ? std::max(s.q[i] - kx[i], 0.0)
                                 : kx[i] - s.q[i];
    primal_sq += violation * violation;
  }
  kkt.primal_residual = std::sqrt(primal_sq);

  Vector r = spmv_t(s.k_matrix, y);
  for (size_t j = 0; j < r.size(); ++j) r[j] = s.objective[j] - r[j];
  const Vector lambda = SplitReducedCosts(s, r);
  double dual_sq = 0.0;
  for (size_t j = 0; j < r.size(); ++j) {
    const double d = r[j] - lambda[j];
    dual_sq += d * d;
  }
  kkt.dual_residual = std::sqrt(dual_sq);

  const double primal_obj = dot(s.objective, x);
  const double dual_obj = dot(s.q, y) + BoundTerm(s, lambda);
  kkt.gap_abs = std::abs(dual_obj - primal_obj);
  kkt.primal_objective = primal_obj + s.objective_constant;
  kkt.dual_objective = dual_obj + s.objective_constant;
  return kkt;
}

KktComponents kkt_error(const LpProblem& problem, std::span<const double> x,
                        std::span<const double> y) {
  return kkt_error(to_saddle(problem), x, y);
}

ProblemNorms problem_norms(const SaddleForm& s) {
  return {norm2(s.q), norm2(s.objective)};
}

bool check_relative_termination(const KktComponents& kkt,
                                const ProblemNorms& norms, double eps) {
  const double primal_obj = kkt.primal_objective - kkt.objective_constant;
  const double dual_obj = kkt.dual_objective - kkt.objective_constant;
  return kkt.gap_abs <= eps * (1.0 + std::abs(dual_obj) + std::abs(primal_obj)) &&
         kkt.primal_residual <= eps * (1.0 + norms.q_norm) &&
         kkt.dual_residual <= eps * (1.0 + norms.c_norm);
}

std::vector<InfeasibilityCandidate> extract_candidates(
    const Iterate& z_curr, const Iterate& z_prev, const Iterate& z_start,
    Index k, const ScalingInfo& info) {
  if (k < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "normalized iterates need k >= 1, got " + std::to_string(k));
  }
  const Iterate diff = difference(z_curr, z_prev);
  Iterate normalized = difference(z_curr, z_start);
  const double inv_k = 1.0 / static_cast<double>(k);
  for (double& v : normalized.x) v *= inv_k;
  for (double& v : normalized.y) v *= inv_k;

  auto unscaled = [&info](CandidateKind kind, const Iterate& ray) {
    auto [x, y] = unscale_iterate(ray.x, ray.y, info);
    return InfeasibilityCandidate{kind, Iterate{std::move(x), std::move(y)}};
  };
  return {unscaled(CandidateKind::kDifference, diff),
          unscaled(CandidateKind::kNormalized, normalized)};
}

bool validate_primal_infeasibility(const SaddleForm& s,
                                   std::span<const double> ray_y, double tol) {
  CheckLength(ray_y.size(), s.num_rows(), "ray_y");
  const double scale = std::max(1.0, norm_inf(ray_y));
  const double slack = tol * scale;
  // Work with the homogeneous dual ray d = -ray_y.
  Vector d(ray_y.begin(), ray_y.end());
  for (double& v : d) v = -v;
  for (Index i = 0; i < s.m1; ++i) {
    if (d[static_cast<size_t>(i)] < -slack) return false;
  }
  Vector r = spmv_t(s.k_matrix, d);
  for (double& v : r) v = -v;
  const Vector lambda = SplitReducedCosts(s, r);
  double residual_sq = 0.0;
  for (size_t j = 0; j < r.size(); ++j) {
    residual_sq += (r[j] - lambda[j]) * (r[j] - lambda[j]);
  }
  if (std::sqrt(residual_sq) > slack) return false;
  const double objective = dot(s.q, d) + BoundTerm(s, lambda);
  return objective > slack;
}

bool validate_primal_infeasibility(const LpProblem& problem,
                                   std::span<const double> ray_y, double tol) {
  return validate_primal_infeasibility(to_saddle(problem), ray_y, tol);
}

bool validate_dual_infeasibility(const SaddleForm& s,
                                 std::span<const double> ray_x, double tol) {
  CheckLength(ray_x.size(), s.num_variables(), "ray_x");
  const double scale = std::max(1.0, norm_inf(ray_x));
  const double slack = tol * scale;
  if (!(dot(s.objective, ray_x) < -slack)) return false;
  const Vector kx = spmv(s.k_matrix, ray_x);
  for (size_t i = 0; i < kx.size(); ++i) {
    if (static_cast<Index>(i) < s.m1) {
      if (kx[i] < -slack) return false;
    } else if (std::abs(kx[i]) > slack) {
      return false;
    }
  }
  for (size_t j = 0; j < ray_x.size(); ++j) {
    const bool has_lower = std::isfinite(s.lower[j]);
    const bool has_upper = std::isfinite(s.upper[j]);
    if (has_lower && ray_x[j] < -slack) return false;
    if (has_upper && ray_x[j] > slack) return false;
  }
  return true;
}

bool validate_dual_infeasibility(const LpProblem& problem,
                                 std::span<const double> ray_x, double tol) {
  return validate_dual_infeasibility(to_saddle(problem), ray_x, tol);
}

}  // namespace fohorse
