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

#include "aptctl/control.hpp"

#include <string>

#include "aptctl/errors.hpp"
#include "aptctl/kernels.hpp"

namespace aptctl {

void Bounds::validate() const {
  if (!(x_lo > 0.0) || !(x_lo <= x_hi)) {
    throw InvalidParameterError("prevention bounds need 0 < x_lo <= x_hi, got [" +
                                std::to_string(x_lo) + ", " +
                                std::to_string(x_hi) + "]");
  }
  if (!(y_lo > 0.0) || !(y_lo <= y_hi)) {
    throw InvalidParameterError("recovery bounds need 0 < y_lo <= y_hi, got [" +
                                std::to_string(y_lo) + ", " +
                                std::to_string(y_hi) + "]");
  }
}

void characterize(std::span<const double> c, std::span<const double> lambda,
                  const Network& net, const AttackStrategy& atk, double beta,
                  const Bounds& bounds, std::span<double> x_out,
                  std::span<double> y_out) {
  bounds.validate();
  const int n = net.size();
  atk.validate(n);
  if (static_cast<int>(c.size()) != n ||
      static_cast<int>(lambda.size()) != n ||
      static_cast<int>(x_out.size()) != n ||
      static_cast<int>(y_out.size()) != n) {
    throw DimensionError("characterize inputs must all have length " +
                         std::to_string(n));
  }
  kernels::characterize_row(c, lambda, net, atk.rates, beta, bounds, x_out,
                            y_out);
}

void characterize_grid(const StateTrajectory& traj,
                       const AdjointTrajectory& adjoint, const Network& net,
                       const AttackStrategy& atk, double beta,
                       const Bounds& bounds, Matrix& x_out, Matrix& y_out) {
  bounds.validate();
  atk.validate(net.size());
  if (!traj.values.same_shape(adjoint.values)) {
    throw DimensionError("state and adjoint grids differ in shape");
  }
  if (traj.values.cols() != net.size()) {
    throw DimensionError("trajectory has " + std::to_string(traj.values.cols()) +
                         " columns for a network of size " +
                         std::to_string(net.size()));
  }
  if (!x_out.same_shape(traj.values)) x_out = Matrix(traj.values.rows(), traj.values.cols());
  if (!y_out.same_shape(traj.values)) y_out = Matrix(traj.values.rows(), traj.values.cols());

  const long cells = static_cast<long>(traj.values.rows()) * traj.values.cols();
  if (cells >= kernels::kMinCellsParallel) {
    kernels::characterize_grid_parallel(traj.values, adjoint.values, net,
                                        atk.rates, beta, bounds, x_out, y_out);
  } else {
    kernels::characterize_grid_serial(traj.values, adjoint.values, net,
                                      atk.rates, beta, bounds, x_out, y_out);
  }
}

ControlTrajectory static_control(double x_level, double y_level,
                                 const ModelParams& params, int n,
                                 const Bounds& bounds) {
  params.validate();
  bounds.validate();
  if (n < 1) {
    throw InvalidParameterError("control grid needs at least one node");
  }
  if (x_level < bounds.x_lo || x_level > bounds.x_hi) {
    throw ValidationError("static prevention level " + std::to_string(x_level) +
                          " outside [" + std::to_string(bounds.x_lo) + ", " +
                          std::to_string(bounds.x_hi) + "]");
  }
  if (y_level < bounds.y_lo || y_level > bounds.y_hi) {
    throw ValidationError("static recovery level " + std::to_string(y_level) +
                          " outside [" + std::to_string(bounds.y_lo) + ", " +
                          std::to_string(bounds.y_hi) + "]");
  }
  return ControlTrajectory{Matrix(params.steps + 1, n, x_level),
                           Matrix(params.steps + 1, n, y_level)};
}

std::optional<BoundsViolation> validate(const ControlTrajectory& u,
                                        const Bounds& bounds) {
  for (int k = 0; k < u.x.rows(); ++k) {
    const auto x_row = u.x.row(k);
    const auto y_row = u.y.row(k);
    for (int i = 0; i < u.x.cols(); ++i) {
      if (x_row[i] < bounds.x_lo || x_row[i] > bounds.x_hi) {
        return BoundsViolation{k, i, true, x_row[i]};
      }
      if (y_row[i] < bounds.y_lo || y_row[i] > bounds.y_hi) {
        return BoundsViolation{k, i, false, y_row[i]};
      }
    }
  }
  return std::nullopt;
}

}  // namespace aptctl
