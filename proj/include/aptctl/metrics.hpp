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

#ifndef APTCTL_METRICS_HPP
#define APTCTL_METRICS_HPP

#include <span>
#include <vector>

#include "aptctl/control.hpp"
#include "aptctl/dynamics.hpp"

namespace aptctl {

/// Objective J = Loss + Cost, each a trapezoidal integral on the grid.
struct ObjectiveBreakdown {
  double loss = 0.0;  // integral of sum_i w_i C_i
  double cost = 0.0;  // integral of sum_i (x_i + y_i)
  double j = 0.0;     // loss + cost
};

/// ce[k]: objective accumulated over [0, t_k] (nondecreasing, ce[0] = 0,
/// ce[M] = J). sc[k]: total instantaneous defense spending sum_i (x_i + y_i).
struct DiagnosticCurves {
  std::vector<double> ce;
  std::vector<double> sc;
};

/// Trapezoidal rule with spacing dt. Shared by every integral here so that
/// ce[M] == J is an identity rather than an approximation.
double trapezoid(std::span<const double> f, double dt);

ObjectiveBreakdown objective(const StateTrajectory& traj,
                             const ControlTrajectory& u,
                             std::span<const double> w,
                             const ModelParams& params);

/// Running cost L = sum_i (w_i C_i + x_i + y_i).
double running_cost(std::span<const double> c, std::span<const double> x,
                    std::span<const double> y, std::span<const double> w);

/// H = L + sum_i lambda_i * dC_i/dt.
double hamiltonian(std::span<const double> c, std::span<const double> x,
                   std::span<const double> y, std::span<const double> lambda,
                   const Network& net, const AttackStrategy& atk, double beta,
                   std::span<const double> w);

DiagnosticCurves curves(const StateTrajectory& traj, const ControlTrajectory& u,
                        std::span<const double> w, const ModelParams& params);

}  // namespace aptctl

#endif  // APTCTL_METRICS_HPP
