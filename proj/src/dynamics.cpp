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

#include "aptctl/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aptctl/control.hpp"
#include "aptctl/errors.hpp"
#include "aptctl/kernels.hpp"

namespace aptctl {

namespace {

void check_sizes(std::size_t got, int n, const char* what) {
  if (static_cast<int>(got) != n) {
    throw DimensionError(std::string(what) + " has length " +
                         std::to_string(got) + ", expected " +
                         std::to_string(n));
  }
}

void check_positive_x(std::span<const double> x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0.0) {
      throw DivisionGuardError("prevention rate x[" + std::to_string(i) +
                               "] = " + std::to_string(x[i]) +
                               " must be positive");
    }
  }
}

}  // namespace

void AttackStrategy::validate(int n) const {
  check_sizes(rates.size(), n, "attack strategy");
  for (int i = 0; i < n; ++i) {
    if (rates[i] < 0.0 || !std::isfinite(rates[i])) {
      throw ValidationError("attack rate a[" + std::to_string(i) + "] = " +
                            std::to_string(rates[i]) + " must be >= 0");
    }
  }
}

void ModelParams::validate() const {
  if (!(beta > 0.0)) {
    throw InvalidParameterError("infection force beta must be positive");
  }
  if (!(horizon > 0.0)) {
    throw InvalidParameterError("horizon must be positive");
  }
  if (steps < 1) {
    throw InvalidParameterError("grid needs at least one interval");
  }
}

void state_rhs(std::span<const double> c, std::span<const double> x,
               std::span<const double> y, const Network& net,
               const AttackStrategy& atk, double beta, std::span<double> out) {
  const int n = net.size();
  check_sizes(c.size(), n, "state");
  check_sizes(x.size(), n, "prevention rates");
  check_sizes(y.size(), n, "recovery rates");
  check_sizes(out.size(), n, "output");
  atk.validate(n);
  check_positive_x(x);
  if (n >= kernels::kMinNodesParallel) {
    kernels::state_rhs_parallel(c, x, y, net, atk.rates, beta, out);
  } else {
    kernels::state_rhs_serial(c, x, y, net, atk.rates, beta, out);
  }
}

void adjoint_rhs(std::span<const double> lambda, std::span<const double> c,
                 std::span<const double> x, std::span<const double> y,
                 const Network& net, const AttackStrategy& atk, double beta,
                 std::span<const double> w, std::span<double> out) {
  const int n = net.size();
  check_sizes(lambda.size(), n, "adjoint");
  check_sizes(c.size(), n, "state");
  check_sizes(x.size(), n, "prevention rates");
  check_sizes(y.size(), n, "recovery rates");
  check_sizes(w.size(), n, "loss weights");
  check_sizes(out.size(), n, "output");
  atk.validate(n);
  check_positive_x(x);
  if (n >= kernels::kMinNodesParallel) {
    kernels::adjoint_rhs_parallel(lambda, c, x, y, net, atk.rates, beta, w,
                                  out);
  } else {
    kernels::adjoint_rhs_serial(lambda, c, x, y, net, atk.rates, beta, w, out);
  }
}

StateTrajectory forward_integrate(std::span<const double> c0,
                                  const ControlTrajectory& u,
                                  const Network& net, const AttackStrategy& atk,
                                  const ModelParams& params) {
  params.validate();
  const int n = net.size();
  const int m = params.steps;
  check_sizes(c0.size(), n, "initial state");
  atk.validate(n);
  if (u.x.rows() != m + 1 || u.x.cols() != n || !u.x.same_shape(u.y)) {
    throw DimensionError("control grid is " + std::to_string(u.x.rows()) + "x" +
                         std::to_string(u.x.cols()) + ", expected " +
                         std::to_string(m + 1) + "x" + std::to_string(n));
  }
  check_positive_x(u.x.flat());
  for (int i = 0; i < n; ++i) {
    if (!(c0[i] >= 0.0 && c0[i] <= 1.0)) {
      throw ValidationError("initial state C0[" + std::to_string(i) + "] = " +
                            std::to_string(c0[i]) + " outside [0,1]");
    }
  }

  const double dt = params.dt();
  const double eps_clip = 10.0 * dt;
  const bool parallel = n >= kernels::kMinNodesParallel;

  StateTrajectory traj{Matrix(m + 1, n)};
  std::copy(c0.begin(), c0.end(), traj.values.row(0).begin());
  std::vector<double> rhs(n);

  for (int k = 0; k < m; ++k) {
    const auto c_row = traj.values.row(k);
    if (parallel) {
      kernels::state_rhs_parallel(c_row, u.x.row(k), u.y.row(k), net, atk.rates,
                                  params.beta, rhs);
    } else {
      kernels::state_rhs_serial(c_row, u.x.row(k), u.y.row(k), net, atk.rates,
                                params.beta, rhs);
    }
    auto next = traj.values.row(k + 1);
    for (int i = 0; i < n; ++i) {
      const double stepped = c_row[i] + dt * rhs[i];
      const double overshoot = std::max(stepped - 1.0, -stepped);
      if (overshoot > eps_clip) {
        throw StepSizeError(
            "state left [0,1] by " + std::to_string(overshoot) + " at step " +
            std::to_string(k + 1) + ", node " + std::to_string(i) +
            "; refine the grid (increase steps)");
      }
      next[i] = std::clamp(stepped, 0.0, 1.0);
    }
  }
  return traj;
}

AdjointTrajectory backward_integrate(const StateTrajectory& traj,
                                     const ControlTrajectory& u,
                                     const Network& net,
                                     const AttackStrategy& atk,
                                     const ModelParams& params,
                                     std::span<const double> w) {
  params.validate();
  const int n = net.size();
  const int m = params.steps;
  check_sizes(w.size(), n, "loss weights");
  atk.validate(n);
  if (traj.values.rows() != m + 1 || traj.values.cols() != n) {
    throw DimensionError("state grid is " + std::to_string(traj.values.rows()) +
                         "x" + std::to_string(traj.values.cols()) +
                         ", expected " + std::to_string(m + 1) + "x" +
                         std::to_string(n));
  }
  if (!u.x.same_shape(traj.values) || !u.y.same_shape(traj.values)) {
    throw DimensionError("control grid does not match the state grid");
  }
  check_positive_x(u.x.flat());

  const double dt = params.dt();
  const bool parallel = n >= kernels::kMinNodesParallel;

  AdjointTrajectory adj{Matrix(m + 1, n)};  // terminal row stays exactly zero
  std::vector<double> rhs(n);
  for (int k = m - 1; k >= 0; --k) {
    const auto l_next = adj.values.row(k + 1);
    if (parallel) {
      kernels::adjoint_rhs_parallel(l_next, traj.values.row(k + 1),
                                    u.x.row(k + 1), u.y.row(k + 1), net,
                                    atk.rates, params.beta, w, rhs);
    } else {
      kernels::adjoint_rhs_serial(l_next, traj.values.row(k + 1),
                                  u.x.row(k + 1), u.y.row(k + 1), net,
                                  atk.rates, params.beta, w, rhs);
    }
    auto l_row = adj.values.row(k);
    for (int i = 0; i < n; ++i) {
      l_row[i] = l_next[i] - dt * rhs[i];
    }
  }
  return adj;
}

}  // namespace aptctl
