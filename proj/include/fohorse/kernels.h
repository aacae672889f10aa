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

// Stateless PDHG building blocks. With step-size eta and primal weight omega
// the primal and dual steps are tau = eta / omega and sigma = eta * omega,
// and one PDHG step from z = (x, y) is
//
//   x+ = proj_X(x - tau (c - K^T y))
//   y+ = proj_Y(y + sigma (q - K (2 x+ - x))).
//
// The natural metric of the step is the P-norm with
//
//   P = [ (omega/eta) I      K^T          ]
//       [      K        (1/(eta omega)) I ],
//
// which is positive semidefinite whenever eta ||K||_2 <= 1.

#ifndef FOHORSE_KERNELS_H_
#define FOHORSE_KERNELS_H_

#include "fohorse/problem.h"
#include "fohorse/sparse_matrix.h"

namespace fohorse {

struct Iterate {
  Vector x;
  Vector y;

  static Iterate Zero(Index n, Index m) {
    return {Vector(static_cast<size_t>(n), 0.0),
            Vector(static_cast<size_t>(m), 0.0)};
  }
  friend bool operator==(const Iterate&, const Iterate&) = default;
};

// a - b.
Iterate difference(const Iterate& a, const Iterate& b);

struct StepParams {
  double eta = 1.0;
  double omega = 1.0;

  double tau() const { return eta / omega; }
  double sigma() const { return eta * omega; }
};

// One PDHG step. Uses exactly two matrix products (K^T y, then
// K (2 x+ - x)). Throws kNonFiniteIterate if the result has a NaN or inf
// entry; the error index is the flattened (x then y) position.
Iterate pdhg_step(const Iterate& z, const SaddleForm& saddle,
                  const StepParams& params);

// (k+1)/(k+2) * pdhg_z + 1/(k+2) * anchor.
Iterate halpern_combine(const Iterate& pdhg_z, const Iterate& anchor,
                        Index k);

// (k+1)/(k+2) * (2 pdhg_z - z) + 1/(k+2) * anchor.
Iterate reflected_halpern_combine(const Iterate& pdhg_z, const Iterate& z,
                                  const Iterate& anchor, Index k);

// sqrt(omega ||x||^2 + ||y||^2 / omega).
double omega_norm(const Iterate& z, double omega);

// dy^T K dx, the cross term of the P-norm.
double interaction(const Iterate& dz, const SaddleForm& saddle);

// ||dz||_P. A quadratic form that round-off pushes below zero is reported as
// zero.
double p_norm_movement(const Iterate& dz, const SaddleForm& saddle,
                       const StepParams& params);
// Same, with the cross term dy^T K dx already computed.
double p_norm_movement(const Iterate& dz, double cross_term,
                       const StepParams& params);

// Largest step-size compatible with the movement dz:
// ||dz||_omega^2 / (2 |dy^T K dx|), or +inf when the cross term vanishes.
double step_size_bound(const Iterate& dz, const SaddleForm& saddle,
                       double omega);
double step_size_bound(const Iterate& dz, double cross_term, double omega);

}  // namespace fohorse

#endif  // FOHORSE_KERNELS_H_
