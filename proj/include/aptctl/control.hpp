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

#ifndef APTCTL_CONTROL_HPP
#define APTCTL_CONTROL_HPP

#include <optional>
#include <span>

#include "aptctl/dynamics.hpp"
#include "aptctl/matrix.hpp"
#include "aptctl/network.hpp"

namespace aptctl {

/// Box bounds of the admissible control set: 0 < x_lo <= x_hi,
/// 0 < y_lo <= y_hi.
struct Bounds {
  double x_lo = 0.1;
  double x_hi = 0.7;
  double y_lo = 0.1;
  double y_hi = 0.7;

  void validate() const;
};

/// Defense strategy on the grid: prevention rates x and recovery rates y,
/// each an (M+1) x N matrix.
struct ControlTrajectory {
  Matrix x;
  Matrix y;

  int rows() const { return x.rows(); }
  int nodes() const { return x.cols(); }
};

/// Pointwise minimizer of the Hamiltonian at one grid time:
///   x_i = clamp(sqrt(max(0, lambda_i [a_i + beta sum_j a_ji C_j] (1-C_i))),
///               x_lo, x_hi)
///   y_i = y_hi if lambda_i C_i > 1, else y_lo (ties take y_lo).
void characterize(std::span<const double> c, std::span<const double> lambda,
                  const Network& net, const AttackStrategy& atk, double beta,
                  const Bounds& bounds, std::span<double> x_out,
                  std::span<double> y_out);

/// characterize applied to every grid row of a state/adjoint pair.
void characterize_grid(const StateTrajectory& traj,
                       const AdjointTrajectory& adjoint, const Network& net,
                       const AttackStrategy& atk, double beta,
                       const Bounds& bounds, Matrix& x_out, Matrix& y_out);

/// Constant-in-time, uniform-across-nodes strategy at the given levels.
/// Levels outside the bounds raise ValidationError.
ControlTrajectory static_control(double x_level, double y_level,
                                 const ModelParams& params, int n,
                                 const Bounds& bounds);

/// Location of the first admissibility violation in a control grid.
struct BoundsViolation {
  int k = 0;        // grid row
  int i = 0;        // node
  bool is_x = true; // offending component
  double value = 0.0;
};

/// Verdict-style admissibility check: nullopt means every entry is within
/// the box.
std::optional<BoundsViolation> validate(const ControlTrajectory& u,
                                        const Bounds& bounds);

}  // namespace aptctl

#endif  // APTCTL_CONTROL_HPP
