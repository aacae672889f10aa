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

// Restarted (reflected) Halpern PDHG for general-form LPs.
//
// A solve runs on the preconditioned saddle form, starting from all-zero
// iterates. Iterations are grouped into epochs; within an epoch every
// iterate is anchored at the epoch's first point. Every check_frequency
// iterations the current candidate is mapped back to the original problem
// and tested for optimality and for infeasibility.

#ifndef FOHORSE_SOLVER_H_
#define FOHORSE_SOLVER_H_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fohorse/diagnostics.h"
#include "fohorse/kernels.h"
#include "fohorse/problem.h"
#include "fohorse/scaling.h"

namespace fohorse {

enum class SolverMode { kVanillaPdhg, kHalpern, kReflectedHalpern, kAverage };
enum class RestartScheme { kFixedPointResidual, kKktError, kNone };
enum class StepSizeMode { kConstant, kAdaptive };

std::string_view SolverModeName(SolverMode mode);
std::string_view RestartSchemeName(RestartScheme scheme);

// One logged iteration. `kkt` is set only on iterations where the
// termination candidate was evaluated.
struct TraceEvent {
  Index iteration = 0;
  Index epoch = 0;
  Index inner_k = 0;
  double eta = 0.0;
  double omega = 0.0;
  double residual = 0.0;
  bool restart = false;
  std::optional<KktComponents> kkt;
};

struct SolverConfig {
  double tolerance_eps = 1e-4;
  SolverMode mode = SolverMode::kReflectedHalpern;
  RestartScheme restart_scheme = RestartScheme::kFixedPointResidual;
  double restart_beta = 0.36787944117144233;  // 1/e
  Index tau0 = 32;
  double theta = 0.5;
  StepSizeMode step_size_mode = StepSizeMode::kAdaptive;
  Index iteration_limit = 1'000'000;
  double time_limit = 3600.0;  // seconds
  Index check_frequency = 64;
  PreconditionOptions preconditioning;
  double certificate_tolerance = 1e-12;

  // Keeps the original-space start point of every epoch in the result.
  bool record_epoch_starts = false;
  // Called for every trace_every-th iteration, for every epoch start and for
  // every restart.
  std::function<void(const TraceEvent&)> trace;
  Index trace_every = 1;

  // Throws kInvalidArgument if a field is out of range.
  void validate() const;
};

enum class SolveStatus {
  kOptimal,
  kPrimalInfeasible,
  kDualInfeasible,
  kIterationLimit,
  kTimeLimit,
  kNumericalError,
};

std::string_view SolveStatusName(SolveStatus status);

struct EpochRecord {
  Index start_iteration = 0;
  Index length = 0;
  double initial_residual = 0.0;
  double restart_residual = 0.0;  // residual that triggered the restart
  double eta = 0.0;               // metric parameters frozen for the epoch
  double omega = 0.0;
};

struct Certificate {
  CandidateKind kind = CandidateKind::kDifference;
  // Primal-infeasibility rays live in y, dual-infeasibility rays in x. The
  // ray is scaled to unit infinity norm.
  Vector ray;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kIterationLimit;
  Vector x;
  Vector y;
  Vector reduced_costs;
  std::optional<Certificate> certificate;
  double primal_objective = 0.0;
  double dual_objective = 0.0;
  KktComponents kkt;
  Index iterations = 0;
  Index restarts = 0;
  double solve_time = 0.0;
  std::vector<std::string> warnings;
  // Completed epochs, plus the epoch that was running at termination.
  std::vector<EpochRecord> epochs;
  std::vector<Iterate> epoch_starts;  // only with record_epoch_starts
};

// Throws on invalid input (problem or config); every other outcome is
// reported through the result status.
SolveResult solve(const LpProblem& problem, const SolverConfig& config);

// --- Building blocks, exposed for testing. ---

struct RestartState {
  Index epoch = 0;
  Index inner_k = 0;
  double epoch_initial_residual = 0.0;
};

// Epoch 0: k > tau0. Later epochs: k >= 1 and
// residual <= restart_beta * epoch_initial_residual. Scheme kNone never
// restarts. The kkt_error scheme uses the same decay test on KKT totals.
bool should_restart(const RestartState& state, double current_residual,
                    const SolverConfig& config);

struct StepUpdate {
  bool accepted = false;
  double next_eta = 0.0;
};

// Accepts iff eta <= bound. The next step-size is
// min((1 - (k+1)^-0.3) bound, (1 + (k+1)^-0.6) eta), dropping the first
// term when the bound is infinite. The solver passes the number of step
// attempts so far, this one included. Throws kStepSizeCollapse when the
// result falls below 1e-300 and kNonFiniteIterate when it overflows.
StepUpdate adaptive_step_update(double eta, Index k_total, double bound);

double primal_weight_update(double omega, double delta_x_norm,
                            double delta_y_norm, double theta);

// Step-size weighted average of iterates.
class WeightedAverage {
 public:
  WeightedAverage() = default;

  void add(const Iterate& z, double weight);
  // Throws kEmptyAverage before the first add.
  Iterate value() const;
  void reset();
  bool empty() const { return weight_sum_ == 0.0; }
  double weight_sum() const { return weight_sum_; }

 private:
  Iterate sum_;
  double weight_sum_ = 0.0;
};

}  // namespace fohorse

#endif  // FOHORSE_SOLVER_H_
