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

// Optimality and infeasibility diagnostics, always evaluated on the original
// (unscaled) problem.
//
// Reduced costs: with r = c - K^T y, lambda_i keeps the positive part of r_i
// when l_i is finite and the negative part when u_i is finite, so a free
// variable has lambda_i = 0. The dual objective is
// q^T y + l^T lambda+ - u^T lambda-, where bound terms on infinite bounds
// vanish because the matching part of lambda is zero.
//
// Infeasibility certificates use Farkas sign conventions. A primal
// certificate is a ray y for which -y is an improving ray of the homogeneous
// dual; for a standard-form LP this is {y : b^T y < 0, A^T y >= 0}. A dual
// certificate is a primal recession direction x with c^T x < 0.

#ifndef FOHORSE_DIAGNOSTICS_H_
#define FOHORSE_DIAGNOSTICS_H_

#include <span>
#include <vector>

#include "fohorse/kernels.h"
#include "fohorse/problem.h"
#include "fohorse/scaling.h"

namespace fohorse {

struct KktComponents {
  double primal_residual = 0.0;  // ||(Ax - b; [h - Gx]+)||_2
  double dual_residual = 0.0;    // ||c - K^T y - lambda||_2
  double gap_abs = 0.0;          // |dual_obj - primal_obj|, constants excluded
  double primal_objective = 0.0;  // c^T x + constant
  double dual_objective = 0.0;    // q^T y + l^T lambda+ - u^T lambda- + constant
  double objective_constant = 0.0;

  // Euclidean norm of the three residual components.
  double total() const;
};

Vector reduced_costs(const SaddleForm& saddle, std::span<const double> y);

KktComponents kkt_error(const SaddleForm& saddle, std::span<const double> x,
                        std::span<const double> y);
KktComponents kkt_error(const LpProblem& problem, std::span<const double> x,
                        std::span<const double> y);

struct ProblemNorms {
  double q_norm = 0.0;  // ||q||_2
  double c_norm = 0.0;  // ||c||_2
};
ProblemNorms problem_norms(const SaddleForm& saddle);

// gap <= eps (1 + |dual| + |primal|), primal <= eps (1 + ||q||),
// dual <= eps (1 + ||c||), all non-strict; objectives exclude the constant.
bool check_relative_termination(const KktComponents& kkt,
                                const ProblemNorms& norms, double eps);

enum class CandidateKind { kDifference, kNormalized };

struct InfeasibilityCandidate {
  CandidateKind kind;
  Iterate ray;
};

// {difference: z_curr - z_prev, normalized: (z_curr - z_start) / k}, in that
// order, mapped to the original space through `info`. Requires k >= 1.
std::vector<InfeasibilityCandidate> extract_candidates(
    const Iterate& z_curr, const Iterate& z_prev, const Iterate& z_start,
    Index k, const ScalingInfo& info);

bool validate_primal_infeasibility(const SaddleForm& saddle,
                                   std::span<const double> ray_y, double tol);
bool validate_primal_infeasibility(const LpProblem& problem,
                                   std::span<const double> ray_y, double tol);

bool validate_dual_infeasibility(const SaddleForm& saddle,
                                 std::span<const double> ray_x, double tol);
bool validate_dual_infeasibility(const LpProblem& problem,
                                 std::span<const double> ray_x, double tol);

}  // namespace fohorse

#endif  // FOHORSE_DIAGNOSTICS_H_
