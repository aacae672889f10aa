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

#include "fohorse/kernels.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fohorse/status.h"

namespace fohorse {
namespace {

void CheckSameShape(const Iterate& a, const Iterate& b) {
  if (a.x.size() != b.x.size() || a.y.size() != b.y.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "iterates have shapes (" + std::to_string(a.x.size()) + ", " +
                    std::to_string(a.y.size()) + ") and (" +
                    std::to_string(b.x.size()) + ", " +
                    std::to_string(b.y.size()) + ")");
  }
}

void CheckFiniteIterate(const Iterate& z) {
  for (size_t j = 0; j < z.x.size(); ++j) {
    if (!std::isfinite(z.x[j])) {
      throw Error(ErrorCode::kNonFiniteIterate,
                  "x[" + std::to_string(j) + "] is not finite",
                  static_cast<Index>(j));
    }
  }
  for (size_t i = 0; i < z.y.size(); ++i) {
    if (!std::isfinite(z.y[i])) {
      throw Error(ErrorCode::kNonFiniteIterate,
                  "y[" + std::to_string(i) + "] is not finite",
                  static_cast<Index>(z.x.size() + i));
    }
  }
}

double SquaredNorm(const Vector& v) {
  double sum = 0.0;
  for (double e : v) sum += e * e;
  return sum;
}

}  // namespace

Iterate difference(const Iterate& a, const Iterate& b) {
  CheckSameShape(a, b);
  Iterate d = a;
  for (size_t j = 0; j < d.x.size(); ++j) d.x[j] -= b.x[j];
  for (size_t i = 0; i < d.y.size(); ++i) d.y[i] -= b.y[i];
  return d;
}

Iterate pdhg_step(const Iterate& z, const SaddleForm& s,
                  const StepParams& p) {
  const Index n = s.num_variables();
  const Index m = s.num_rows();
  if (static_cast<Index>(z.x.size()) != n ||
      static_cast<Index>(z.y.size()) != m) {
    throw Error(ErrorCode::kDimensionMismatch,
                "iterate does not match a problem with " + std::to_string(n) +
                    " variables and " + std::to_string(m) + " rows");
  }
  if (!(p.eta > 0.0) || !(p.omega > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "step parameters must be positive");
  }
  const double tau = p.tau();
  const double sigma = p.sigma();

  Iterate next;
  next.x = spmv_t(s.k_matrix, z.y);
  for (size_t j = 0; j < next.x.size(); ++j) {
    const double trial = z.x[j] - tau * (s.objective[j] - next.x[j]);
    next.x[j] = std::clamp(trial, s.lower[j], s.upper[j]);
  }

  Vector extrapolated(next.x.size());
  for (size_t j = 0; j < extrapolated.size(); ++j) {
    extrapolated[j] = 2.0 * next.x[j] - z.x[j];
  }
  next.y = spmv(s.k_matrix, extrapolated);
  const auto m1 = static_cast<size_t>(s.m1);
  for (size_t i = 0; i < next.y.size(); ++i) {
    double value = z.y[i] + sigma * (s.q[i] - next.y[i]);
    if (i < m1) value = std::max(value, 0.0);
    next.y[i] = value;
  }
  CheckFiniteIterate(next);
  return next;
}

Iterate halpern_combine(const Iterate& pdhg_z, const Iterate& anchor,
                        Index k) {
  CheckSameShape(pdhg_z, anchor);
  const double kd = static_cast<double>(k);
  const double w_step = (kd + 1.0) / (kd + 2.0);
  const double w_anchor = 1.0 / (kd + 2.0);
  Iterate out = pdhg_z;
  for (size_t j = 0; j < out.x.size(); ++j) {
    out.x[j] = w_step * pdhg_z.x[j] + w_anchor * anchor.x[j];
  }
  for (size_t i = 0; i < out.y.size(); ++i) {
    out.y[i] = w_step * pdhg_z.y[i] + w_anchor * anchor.y[i];
  }
  return out;
}

Iterate reflected_halpern_combine(const Iterate& pdhg_z, const Iterate& z,
                                  const Iterate& anchor, Index k) {
  CheckSameShape(pdhg_z, z);
  CheckSameShape(pdhg_z, anchor);
  const double kd = static_cast<double>(k);
  const double w_step = (kd + 1.0) / (kd + 2.0);
  const double w_anchor = 1.0 / (kd + 2.0);
  Iterate out = pdhg_z;
  for (size_t j = 0; j < out.x.size(); ++j) {
    out.x[j] = w_step * (2.0 * pdhg_z.x[j] - z.x[j]) + w_anchor * anchor.x[j];
  }
  for (size_t i = 0; i < out.y.size(); ++i) {
    out.y[i] = w_step * (2.0 * pdhg_z.y[i] - z.y[i]) + w_anchor * anchor.y[i];
  }
  return out;
}

double omega_norm(const Iterate& z, double omega) {
  return std::sqrt(omega * SquaredNorm(z.x) + SquaredNorm(z.y) / omega);
}

double interaction(const Iterate& dz, const SaddleForm& s) {
  if (dz.y.empty() || dz.x.empty()) return 0.0;
  return dot(dz.y, spmv(s.k_matrix, dz.x));
}

double p_norm_movement(const Iterate& dz, double cross_term,
                       const StepParams& p) {
  const double quad = (p.omega / p.eta) * SquaredNorm(dz.x) +
                      SquaredNorm(dz.y) / (p.eta * p.omega) +
                      2.0 * cross_term;
  return quad > 0.0 ? std::sqrt(quad) : 0.0;
}

double p_norm_movement(const Iterate& dz, const SaddleForm& s,
                       const StepParams& p) {
  return p_norm_movement(dz, interaction(dz, s), p);
}

double step_size_bound(const Iterate& dz, double cross_term, double omega) {
  const double denominator = 2.0 * std::abs(cross_term);
  if (denominator == 0.0) return std::numeric_limits<double>::infinity();
  const double movement = omega_norm(dz, omega);
  return movement * movement / denominator;
}

double step_size_bound(const Iterate& dz, const SaddleForm& s, double omega) {
  return step_size_bound(dz, interaction(dz, s), omega);
}

}  // namespace fohorse
