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

#include "fohorse/solver.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>
#include <limits>
#include <utility>

#include "fohorse/status.h"

namespace fohorse {
namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMaxStepRetries = 60;
constexpr double kMinStepSize = 1e-300;
// Halpern modes keep eta below 1/||K~||_2, where the P-metric stays positive
// semidefinite and the anchored iteration is nonexpansive.
constexpr double kHalpernStepFraction = 0.99;

void Require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorCode::kInvalidArgument, message);
}

double Distance(const Vector& a, const Vector& b) {
  double sum = 0.0;
  for (size_t i = 0; i < a.size(); ++i) sum += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(sum);
}

void CheckFinite(const Iterate& z) {
  for (double v : z.x) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kNonFiniteIterate, "combined iterate overflowed");
    }
  }
  for (double v : z.y) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kNonFiniteIterate, "combined iterate overflowed");
    }
  }
}

// Unit infinity-norm copy of v, or nothing if v is zero.
std::optional<Vector> Normalized(const Vector& v, double sign) {
  const double norm = norm_inf(v);
  if (!(norm > 0.0) || !std::isfinite(norm)) return std::nullopt;
  Vector out = v;
  for (double& e : out) e *= sign / norm;
  return out;
}

struct Step {
  Iterate w;        // PDHG(z)
  Iterate dz;       // w - z
  double cross = 0;  // dz.y^T K dz.x
  double eta = 0;    // step-size that produced w
};

struct Candidate {
  Vector x;
  Vector y;
  KktComponents kkt;
};

class Solver {
 public:
  Solver(const LpProblem& problem, const SolverConfig& config)
      : config_(config), start_time_(Clock::now()) {
    original_ = to_saddle(problem);
    norms_ = problem_norms(original_);
    std::tie(scaled_, info_) = precondition(original_, config_.preconditioning);
  }

  SolveResult Run();

 private:
  void Initialize();
  Step ComputeStep();
  void StartEpoch(Iterate start);
  void Restart(Iterate start, double trigger);
  Candidate Evaluate(const Iterate& scaled) const;
  bool CheckInfeasibility(const Iterate& w);
  void Finish(SolveStatus status, const Candidate& candidate);
  void EmitTrace(double residual, bool restart,
                 const std::optional<KktComponents>& kkt) const;
  double Elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start_time_).count();
  }

  const SolverConfig& config_;
  Clock::time_point start_time_;
  SaddleForm original_;
  SaddleForm scaled_;
  ScalingInfo info_;
  ProblemNorms norms_;

  Iterate z_;
  Iterate anchor_;
  Iterate z_start_;
  WeightedAverage average_;
  double eta_ = 1.0;
  double omega_ = 1.0;
  StepParams metric_;
  Index epoch_ = 0;
  Index inner_k_ = 0;
  Index total_ = 0;
  double max_eta_ = std::numeric_limits<double>::infinity();
  Index attempts_ = 0;  // PDHG evaluations in the step-size search
  Index epoch_start_iteration_ = 0;
  double epoch_initial_residual_ = 0.0;
  double epoch_initial_kkt_ = 0.0;
  bool retry_warning_ = false;

  SolveResult result_;
};

void Solver::Initialize() {
  const Index n = scaled_.num_variables();
  const Index m = scaled_.num_rows();
  z_start_ = Iterate::Zero(n, m);

  if (config_.step_size_mode == StepSizeMode::kAdaptive) {
    const double max_abs = scaled_.k_matrix.max_abs();
    eta_ = max_abs > 0.0 ? 1.0 / max_abs : 1.0;
    if (config_.mode == SolverMode::kHalpern ||
        config_.mode == SolverMode::kReflectedHalpern) {
      const SpectralNormEstimate norm =
          estimate_spectral_norm(scaled_.k_matrix, 200);
      if (!norm.zero_matrix && norm.value > 0.0) {
        max_eta_ = kHalpernStepFraction / norm.value;
      }
    }
    eta_ = std::min(eta_, max_eta_);
  } else {
    const SpectralNormEstimate norm =
        estimate_spectral_norm(scaled_.k_matrix, 200);
    eta_ = norm.zero_matrix || !(norm.value > 0.0) ? 1.0 : 0.9 / norm.value;
  }
  const double c_norm = norm2(scaled_.objective);
  const double q_norm = norm2(scaled_.q);
  omega_ = c_norm > 1e-10 && q_norm > 1e-10 ? c_norm / q_norm : 1.0;
  StartEpoch(z_start_);
}

Step Solver::ComputeStep() {
  for (int retry = 0;; ++retry) {
    Step step;
    step.w = pdhg_step(z_, scaled_, {eta_, omega_});
    step.dz = difference(step.w, z_);
    step.cross = interaction(step.dz, scaled_);
    step.eta = eta_;
    if (config_.step_size_mode == StepSizeMode::kConstant) return step;

    const double bound = step_size_bound(step.dz, step.cross, omega_);
    // Counting attempts (this one included) keeps the reduction factor
    // 1 - (k+1)^-0.6 away from zero on the very first step.
    ++attempts_;
    const StepUpdate update = adaptive_step_update(eta_, attempts_, bound);
    eta_ = update.next_eta;
    eta_ = std::min(eta_, max_eta_);
    if (update.accepted) return step;
    if (retry == kMaxStepRetries) {
      if (!retry_warning_) {
        result_.warnings.push_back(
            "step-size search hit the retry cap; accepted a step above the "
            "bound");
        retry_warning_ = true;
      }
      return step;
    }
  }
}

void Solver::StartEpoch(Iterate start) {
  z_ = std::move(start);
  anchor_ = z_;
  inner_k_ = 0;
  epoch_start_iteration_ = total_;
  average_.reset();
  if (config_.record_epoch_starts) {
    auto [x, y] = unscale_iterate(z_.x, z_.y, info_);
    result_.epoch_starts.push_back({std::move(x), std::move(y)});
  }
  if (config_.restart_scheme == RestartScheme::kKktError) {
    epoch_initial_kkt_ = Evaluate(z_).kkt.total();
  }
}

void Solver::Restart(Iterate start, double trigger) {
  const double delta_x = Distance(start.x, anchor_.x);
  const double delta_y = Distance(start.y, anchor_.y);
  result_.epochs.push_back({epoch_start_iteration_,
                            total_ - epoch_start_iteration_,
                            epoch_initial_residual_, trigger, metric_.eta,
                            metric_.omega});
  omega_ = primal_weight_update(omega_, delta_x, delta_y, config_.theta);
  ++result_.restarts;
  ++epoch_;
  StartEpoch(std::move(start));
}

Candidate Solver::Evaluate(const Iterate& scaled) const {
  Candidate c;
  std::tie(c.x, c.y) = unscale_iterate(scaled.x, scaled.y, info_);
  c.kkt = kkt_error(original_, c.x, c.y);
  return c;
}

bool Solver::CheckInfeasibility(const Iterate& w) {
  const auto candidates =
      extract_candidates(w, z_, z_start_, std::max<Index>(total_, 1), info_);
  const double tol = config_.certificate_tolerance;
  for (const auto& candidate : candidates) {
    // The dual iterates drift along minus a Farkas ray.
    const auto ray = Normalized(candidate.ray.y, -1.0);
    if (ray && validate_primal_infeasibility(original_, *ray, tol)) {
      result_.certificate = Certificate{candidate.kind, *ray};
      Finish(SolveStatus::kPrimalInfeasible, Evaluate(w));
      return true;
    }
  }
  for (const auto& candidate : candidates) {
    const auto ray = Normalized(candidate.ray.x, 1.0);
    if (ray && validate_dual_infeasibility(original_, *ray, tol)) {
      result_.certificate = Certificate{candidate.kind, *ray};
      Finish(SolveStatus::kDualInfeasible, Evaluate(w));
      return true;
    }
  }
  return false;
}

void Solver::Finish(SolveStatus status, const Candidate& candidate) {
  result_.status = status;
  result_.x = candidate.x;
  result_.y = candidate.y;
  result_.kkt = candidate.kkt;
  result_.reduced_costs = reduced_costs(original_, candidate.y);
  result_.primal_objective = candidate.kkt.primal_objective;
  result_.dual_objective = candidate.kkt.dual_objective;
  result_.iterations = total_;
  result_.epochs.push_back({epoch_start_iteration_,
                            total_ - epoch_start_iteration_,
                            epoch_initial_residual_, 0.0, metric_.eta,
                            metric_.omega});
  result_.solve_time = Elapsed();
}

void Solver::EmitTrace(double residual, bool restart,
                       const std::optional<KktComponents>& kkt) const {
  if (!config_.trace) return;
  // Iteration numbers are 1-based in the trace: the step just taken.
  const bool periodic = total_ % config_.trace_every == 0;
  if (!periodic && inner_k_ != 0 && !restart && !kkt) return;
  config_.trace({total_, epoch_, inner_k_, metric_.eta, metric_.omega,
                 residual, restart, kkt});
}

SolveResult Solver::Run() {
  Initialize();
  try {
    while (true) {
      if (total_ >= config_.iteration_limit) {
        Finish(SolveStatus::kIterationLimit,
               Evaluate(config_.mode == SolverMode::kAverage && !average_.empty()
                            ? average_.value()
                            : z_));
        break;
      }
      if (Elapsed() > config_.time_limit) {
        Finish(SolveStatus::kTimeLimit,
               Evaluate(config_.mode == SolverMode::kAverage && !average_.empty()
                            ? average_.value()
                            : z_));
        break;
      }

      Step step = ComputeStep();
      if (inner_k_ == 0) metric_ = {step.eta, omega_};
      const double residual = p_norm_movement(step.dz, step.cross, metric_);
      if (inner_k_ == 0) epoch_initial_residual_ = residual;
      ++total_;
      if (config_.mode == SolverMode::kAverage) average_.add(step.w, step.eta);

      // Periodic termination and infeasibility checks.
      std::optional<KktComponents> checked_kkt;
      std::optional<Iterate> average_point;
      if (total_ % config_.check_frequency == 0) {
        const Iterate* candidate_point = &step.w;
        if (config_.mode == SolverMode::kAverage) {
          average_point = average_.value();
          candidate_point = &*average_point;
        }
        const Candidate candidate = Evaluate(*candidate_point);
        checked_kkt = candidate.kkt;
        if (check_relative_termination(candidate.kkt, norms_,
                                       config_.tolerance_eps)) {
          EmitTrace(residual, false, checked_kkt);
          Finish(SolveStatus::kOptimal, candidate);
          break;
        }
        if (CheckInfeasibility(step.w)) {
          EmitTrace(residual, false, checked_kkt);
          break;
        }
      }

      // Restart decision.
      bool restart = false;
      double trigger = residual;
      Iterate restart_point;
      const RestartState state{epoch_, inner_k_, epoch_initial_residual_};
      if (config_.restart_scheme == RestartScheme::kNone) {
        // Never restarts.
      } else if (epoch_ == 0) {
        restart = should_restart(state, residual, config_);
      } else if (config_.restart_scheme == RestartScheme::kKktError) {
        if (checked_kkt) {
          trigger = checked_kkt->total();
          restart = should_restart({epoch_, inner_k_, epoch_initial_kkt_},
                                   trigger, config_);
        }
      } else if (config_.mode == SolverMode::kAverage) {
        if (average_point) {
          const Iterate t = pdhg_step(*average_point, scaled_, metric_);
          const Iterate d = difference(t, *average_point);
          trigger = p_norm_movement(d, scaled_, metric_);
          restart = should_restart(state, trigger, config_);
        }
      } else {
        restart = should_restart(state, residual, config_);
      }
      if (restart) {
        restart_point = config_.mode == SolverMode::kAverage
                            ? (average_point ? *average_point : average_.value())
                            : step.w;
      }
      EmitTrace(residual, restart, checked_kkt);

      if (restart) {
        Restart(std::move(restart_point), trigger);
        continue;
      }
      switch (config_.mode) {
        case SolverMode::kVanillaPdhg:
        case SolverMode::kAverage:
          z_ = std::move(step.w);
          break;
        case SolverMode::kHalpern:
          z_ = halpern_combine(step.w, anchor_, inner_k_);
          CheckFinite(z_);
          break;
        case SolverMode::kReflectedHalpern:
          z_ = reflected_halpern_combine(step.w, z_, anchor_, inner_k_);
          CheckFinite(z_);
          break;
      }
      ++inner_k_;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNonFiniteIterate &&
        e.code() != ErrorCode::kStepSizeCollapse) {
      throw;
    }
    result_.warnings.push_back(e.what());
    Finish(SolveStatus::kNumericalError, Evaluate(z_));
  }
  return std::move(result_);
}

}  // namespace

std::string_view SolverModeName(SolverMode mode) {
  switch (mode) {
    case SolverMode::kVanillaPdhg: return "pdhg";
    case SolverMode::kHalpern: return "hpdhg";
    case SolverMode::kReflectedHalpern: return "r2hpdhg";
    case SolverMode::kAverage: return "average";
  }
  return "unknown";
}

std::string_view RestartSchemeName(RestartScheme scheme) {
  switch (scheme) {
    case RestartScheme::kFixedPointResidual: return "fpr";
    case RestartScheme::kKktError: return "kkt";
    case RestartScheme::kNone: return "none";
  }
  return "unknown";
}

std::string_view SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "Optimal";
    case SolveStatus::kPrimalInfeasible: return "PrimalInfeasible";
    case SolveStatus::kDualInfeasible: return "DualInfeasible";
    case SolveStatus::kIterationLimit: return "IterationLimit";
    case SolveStatus::kTimeLimit: return "TimeLimit";
    case SolveStatus::kNumericalError: return "NumericalError";
  }
  return "Unknown";
}

void SolverConfig::validate() const {
  Require(tolerance_eps > 0.0, "tolerance_eps must be positive");
  Require(restart_beta > 0.0 && restart_beta < 1.0,
          "restart_beta must lie in (0, 1)");
  Require(tau0 >= 1, "tau0 must be at least 1");
  Require(theta >= 0.0 && theta <= 1.0, "theta must lie in [0, 1]");
  Require(iteration_limit >= 0, "iteration_limit must be nonnegative");
  Require(time_limit > 0.0, "time_limit must be positive");
  Require(check_frequency >= 1, "check_frequency must be at least 1");
  Require(certificate_tolerance > 0.0,
          "certificate_tolerance must be positive");
  Require(trace_every >= 1, "trace_every must be at least 1");
  Require(preconditioning.ruiz_iterations >= 0,
          "ruiz_iterations must be nonnegative");
  Require(preconditioning.pc_alpha >= 0.0 && preconditioning.pc_alpha <= 2.0,
          "pc_alpha must lie in [0, 2]");
}

SolveResult solve(const LpProblem& problem, const SolverConfig& config) {
  config.validate();
  Solver solver(problem, config);
  return solver.Run();
}

bool should_restart(const RestartState& state, double current_residual,
                    const SolverConfig& config) {
  if (config.restart_scheme == RestartScheme::kNone) return false;
  if (state.epoch == 0) return state.inner_k > config.tau0;
  return state.inner_k >= 1 &&
         current_residual <= config.restart_beta * state.epoch_initial_residual;
}

StepUpdate adaptive_step_update(double eta, Index k_total, double bound) {
  Require(eta > 0.0, "step-size must be positive");
  const double k1 = static_cast<double>(k_total) + 1.0;
  const double grow = (1.0 + std::pow(k1, -0.6)) * eta;
  StepUpdate update;
  update.accepted = eta <= bound;
  update.next_eta =
      std::isinf(bound) ? grow : std::min((1.0 - std::pow(k1, -0.3)) * bound, grow);
  if (!std::isfinite(update.next_eta)) {
    throw Error(ErrorCode::kNonFiniteIterate, "step-size overflowed");
  }
  if (!(update.next_eta >= kMinStepSize)) {
    throw Error(ErrorCode::kStepSizeCollapse,
                "step-size fell to " + std::to_string(update.next_eta));
  }
  return update;
}

double primal_weight_update(double omega, double delta_x_norm,
                            double delta_y_norm, double theta) {
  if (delta_x_norm == 0.0 || delta_y_norm == 0.0 ||
      delta_x_norm < 1e-10 * delta_y_norm ||
      delta_y_norm < 1e-10 * delta_x_norm) {
    return omega;
  }
  return std::exp(theta * std::log(delta_y_norm / delta_x_norm) +
                  (1.0 - theta) * std::log(omega));
}

void WeightedAverage::add(const Iterate& z, double weight) {
  Require(weight > 0.0, "average weight must be positive");
  if (weight_sum_ == 0.0) {
    sum_ = Iterate::Zero(static_cast<Index>(z.x.size()),
                         static_cast<Index>(z.y.size()));
  } else if (z.x.size() != sum_.x.size() || z.y.size() != sum_.y.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "averaged iterates must share one shape");
  }
  for (size_t j = 0; j < z.x.size(); ++j) sum_.x[j] += weight * z.x[j];
  for (size_t i = 0; i < z.y.size(); ++i) sum_.y[i] += weight * z.y[i];
  weight_sum_ += weight;
}

Iterate WeightedAverage::value() const {
  if (weight_sum_ == 0.0) {
    throw Error(ErrorCode::kEmptyAverage, "average queried before any update");
  }
  Iterate out = sum_;
  for (double& v : out.x) v /= weight_sum_;
  for (double& v : out.y) v /= weight_sum_;
  return out;
}

void WeightedAverage::reset() {
  sum_ = Iterate{};
  weight_sum_ = 0.0;
}

}  // namespace fohorse
