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

#include "aptctl/metrics.hpp"

#include <string>
#include <vector>

#include "aptctl/errors.hpp"

namespace aptctl {

namespace {

void check_grids(const StateTrajectory& traj, const ControlTrajectory& u,
                 std::span<const double> w, const ModelParams& params) {
  if (traj.values.rows() != params.steps + 1) {
    throw DimensionError("trajectory has " + std::to_string(traj.values.rows()) +
                         " rows, expected " + std::to_string(params.steps + 1));
  }
  if (!u.x.same_shape(traj.values) || !u.y.same_shape(traj.values)) {
    throw DimensionError("control grid does not match the state grid");
  }
  if (static_cast<int>(w.size()) != traj.values.cols()) {
    throw DimensionError("loss weights have length " +
                         std::to_string(w.size()) + ", expected " +
                         std::to_string(traj.values.cols()));
  }
}

}  // namespace

double trapezoid(std::span<const double> f, double dt) {
  if (f.size() < 2) return 0.0;
  double sum = 0.5 * (f.front() + f.back());
  for (std::size_t k = 1; k + 1 < f.size(); ++k) sum += f[k];
  return sum * dt;
}

double running_cost(std::span<const double> c, std::span<const double> x,
                    std::span<const double> y, std::span<const double> w) {
  double total = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    total += w[i] * c[i] + x[i] + y[i];
  }
  return total;
}

ObjectiveBreakdown objective(const StateTrajectory& traj,
                             const ControlTrajectory& u,
                             std::span<const double> w,
                             const ModelParams& params) {
  check_grids(traj, u, w, params);
  const int rows = traj.values.rows();
  const int n = traj.values.cols();

  std::vector<double> loss_rate(rows), cost_rate(rows);
  for (int k = 0; k < rows; ++k) {
    const auto c_row = traj.values.row(k);
    const auto x_row = u.x.row(k);
    const auto y_row = u.y.row(k);
    double lr = 0.0, cr = 0.0;
    for (int i = 0; i < n; ++i) {
      lr += w[i] * c_row[i];
      cr += x_row[i] + y_row[i];
    }
    loss_rate[k] = lr;
    cost_rate[k] = cr;
  }

  ObjectiveBreakdown out;
  out.loss = trapezoid(loss_rate, params.dt());
  out.cost = trapezoid(cost_rate, params.dt());
  out.j = out.loss + out.cost;
  return out;
}

double hamiltonian(std::span<const double> c, std::span<const double> x,
                   std::span<const double> y, std::span<const double> lambda,
                   const Network& net, const AttackStrategy& atk, double beta,
                   std::span<const double> w) {
  std::vector<double> rhs(net.size());
  state_rhs(c, x, y, net, atk, beta, rhs);
  double h = running_cost(c, x, y, w);
  for (int i = 0; i < net.size(); ++i) h += lambda[i] * rhs[i];
  return h;
}

DiagnosticCurves curves(const StateTrajectory& traj, const ControlTrajectory& u,
                        std::span<const double> w, const ModelParams& params) {
  check_grids(traj, u, w, params);
  const int rows = traj.values.rows();
  const double dt = params.dt();

  DiagnosticCurves out;
  out.ce.resize(rows);
  out.sc.resize(rows);

  std::vector<double> rate(rows);
  for (int k = 0; k < rows; ++k) {
    rate[k] = running_cost(traj.values.row(k), u.x.row(k), u.y.row(k), w);
    double spend = 0.0;
    const auto x_row = u.x.row(k);
    const auto y_row = u.y.row(k);
    for (int i = 0; i < u.x.cols(); ++i) spend += x_row[i] + y_row[i];
    out.sc[k] = spend;
  }
  out.ce[0] = 0.0;
  for (int k = 1; k < rows; ++k) {
    out.ce[k] = out.ce[k - 1] + 0.5 * dt * (rate[k - 1] + rate[k]);
  }
  return out;
}

}  // namespace aptctl
