/*
 Copyright 2026 The aptctl Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#ifndef APTCTL_DYNAMICS_HPP
#define APTCTL_DYNAMICS_HPP

#include <span>
#include <vector>

#include "aptctl/matrix.hpp"
#include "aptctl/network.hpp"

namespace aptctl {

/// Per-node attack cost rates a_i >= 0.
struct AttackStrategy {
  std::vector<double> rates;

  int size() const { return static_cast<int>(rates.size()); }
  void validate(int n) const;
};

/// Model constants: infection force beta, horizon T, grid interval count M.
struct ModelParams {
  double beta = 0.001;
  double horizon = 20.0;
  int steps = 2000;

  double dt() const { return horizon / steps; }
  void validate() const;
};

/// Compromise probabilities C_i(t_k) on the uniform grid, rows k = 0..M.
struct StateTrajectory {
  Matrix values;
};

/// Costates lambda_i(t_k); the terminal row is identically zero.
struct AdjointTrajectory {
  Matrix values;
};

struct ControlTrajectory;  // control.hpp

/// dC_i/dt = (1/x_i) [a_i + beta * sum_j a_ji C_j] (1 - C_i) - y_i C_i.
/// Throws DivisionGuardError if any x_i is zero.
void state_rhs(std::span<const double> c, std::span<const double> x,
               std::span<const double> y, const Network& net,
               const AttackStrategy& atk, double beta, std::span<double> out);

/// dlambda_i/dt = -w_i + y_i lambda_i
///                + (lambda_i/x_i) [a_i + beta * sum_j a_ji C_j]
///                - beta * sum_j a_ij (1 - C_j) lambda_j / x_j.
void adjoint_rhs(std::span<const double> lambda, std::span<const double> c,
                 std::span<const double> x, std::span<const double> y,
                 const Network& net, const AttackStrategy& atk, double beta,
                 std::span<const double> w, std::span<double> out);

/// Explicit forward Euler from C0. Each step is clipped to [0,1]; an
/// overshoot beyond eps_clip = 10*dt raises StepSizeError (grid too coarse).
StateTrajectory forward_integrate(std::span<const double> c0,
                                  const ControlTrajectory& u,
                                  const Network& net, const AttackStrategy& atk,
                                  const ModelParams& params);

/// Backward Euler marching from lambda(T) = 0, evaluating the right-hand
/// side at the right endpoint of each interval.
AdjointTrajectory backward_integrate(const StateTrajectory& traj,
                                     const ControlTrajectory& u,
                                     const Network& net,
                                     const AttackStrategy& atk,
                                     const ModelParams& params,
                                     std::span<const double> w);

}  // namespace aptctl

#endif  // APTCTL_DYNAMICS_HPP
