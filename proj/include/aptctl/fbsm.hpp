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

#ifndef APTCTL_FBSM_HPP
#define APTCTL_FBSM_HPP

#include <optional>
#include <span>
#include <vector>

#include "aptctl/control.hpp"
#include "aptctl/dynamics.hpp"

namespace aptctl {

/// Forward-backward sweep settings.
struct SolverConfig {
  double relaxation = 0.5;  // blend weight for the control update, in (0,1]
  double tol = 1e-4;        // max relative control change at convergence
  int max_iters = 500;

  void validate() const;
};

/// Result of one solve. When converged, the returned control satisfies the
/// pointwise characterization exactly (one final re-characterization pass),
/// and state/adjoint are re-integrated under it so the triple is consistent.
struct SolveReport {
  ControlTrajectory u_star;
  StateTrajectory c_star;
  AdjointTrajectory lambda_star;

  double j_star = 0.0;
  double loss_star = 0.0;
  double cost_star = 0.0;

  int iterations = 0;
  bool converged = false;
  std::vector<double> residual_history;   // fixed-point gap per sweep
  std::vector<double> objective_history;  // J of each iterate

  // chattering diagnostic: count of adjacent-in-time recovery-rate flips
  // in the returned control
  long y_switch_count = 0;
};

/// Midpoint-of-the-box constant control, used to start the sweep.
ControlTrajectory initial_guess(const Bounds& bounds, const ModelParams& params,
                                int n);

/// Forward-backward sweep: integrate the state forward, the adjoint
/// backward, re-characterize the control on every grid point, and blend
/// with the previous iterate until the max relative control change
/// |u_new - u| / max(|u|, 1e-12) over the grid falls below tol.
/// Non-convergence at max_iters is reported, not thrown.
SolveReport solve(const Network& net, const AttackStrategy& atk,
                  const ModelParams& params, const Bounds& bounds,
                  std::span<const double> c0, const SolverConfig& cfg,
                  const std::optional<ControlTrajectory>& initial = std::nullopt);

}  // namespace aptctl

#endif  // APTCTL_FBSM_HPP
