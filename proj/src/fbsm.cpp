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

#include "aptctl/fbsm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aptctl/errors.hpp"
#include "aptctl/metrics.hpp"

namespace aptctl {

namespace {

/// max over the grid of |b - a| / max(|a|, 1e-12)
double max_relative_change(const Matrix& a, const Matrix& b) {
  double worst = 0.0;
  const auto fa = a.flat();
  const auto fb = b.flat();
  for (std::size_t idx = 0; idx < fa.size(); ++idx) {
    const double denom = std::max(std::abs(fa[idx]), 1e-12);
    worst = std::max(worst, std::abs(fb[idx] - fa[idx]) / denom);
  }
  return worst;
}

void blend_into(Matrix& current, const Matrix& target, double omega, double lo,
                double hi) {
  auto cur = current.flat();
  const auto tgt = target.flat();
  for (std::size_t idx = 0; idx < cur.size(); ++idx) {
    // clamp keeps rounding from nudging the blend past the box
    cur[idx] = std::clamp((1.0 - omega) * cur[idx] + omega * tgt[idx], lo, hi);
  }
}

long count_y_switches(const Matrix& y) {
  long switches = 0;
  for (int k = 0; k + 1 < y.rows(); ++k) {
    const auto row = y.row(k);
    const auto next = y.row(k + 1);
    for (int i = 0; i < y.cols(); ++i) {
      if (row[i] != next[i]) ++switches;
    }
  }
  return switches;
}

}  // namespace

void SolverConfig::validate() const {
  if (!(relaxation > 0.0 && relaxation <= 1.0)) {
    throw InvalidParameterError("relaxation must lie in (0,1], got " +
                                std::to_string(relaxation));
  }
  if (!(tol > 0.0)) {
    throw InvalidParameterError("tolerance must be positive");
  }
  if (max_iters < 1) {
    throw InvalidParameterError("need at least one iteration");
  }
}

ControlTrajectory initial_guess(const Bounds& bounds, const ModelParams& params,
                                int n) {
  bounds.validate();
  params.validate();
  return ControlTrajectory{
      Matrix(params.steps + 1, n, 0.5 * (bounds.x_lo + bounds.x_hi)),
      Matrix(params.steps + 1, n, 0.5 * (bounds.y_lo + bounds.y_hi))};
}

SolveReport solve(const Network& net, const AttackStrategy& atk,
                  const ModelParams& params, const Bounds& bounds,
                  std::span<const double> c0, const SolverConfig& cfg,
                  const std::optional<ControlTrajectory>& initial) {
  params.validate();
  bounds.validate();
  cfg.validate();
  const int n = net.size();
  atk.validate(n);

  ControlTrajectory u = initial ? *initial : initial_guess(bounds, params, n);
  if (initial) {
    if (u.x.rows() != params.steps + 1 || u.x.cols() != n ||
        !u.x.same_shape(u.y)) {
      throw DimensionError("initial control grid does not match the problem");
    }
    if (auto bad = validate(u, bounds)) {
      throw ValidationError("initial control violates bounds at row " +
                            std::to_string(bad->k) + ", node " +
                            std::to_string(bad->i));
    }
  }

  const auto& w = net.loss_weights();

  SolveReport report;
  Matrix x_new, y_new;
  bool converged = false;
  int iterations = 0;

  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    ++iterations;
    StateTrajectory traj = forward_integrate(c0, u, net, atk, params);
    report.objective_history.push_back(objective(traj, u, w, params).j);
    AdjointTrajectory adj = backward_integrate(traj, u, net, atk, params, w);
    characterize_grid(traj, adj, net, atk, params.beta, bounds, x_new, y_new);

    const double residual = std::max(max_relative_change(u.x, x_new),
                                     max_relative_change(u.y, y_new));
    report.residual_history.push_back(residual);

    if (residual <= cfg.tol) {
      // adopt the characterized control so the answer satisfies the
      // pointwise optimality form exactly (re-snaps the blended y)
      u.x = x_new;
      u.y = y_new;
      converged = true;
      break;
    }
    blend_into(u.x, x_new, cfg.relaxation, bounds.x_lo, bounds.x_hi);
    blend_into(u.y, y_new, cfg.relaxation, bounds.y_lo, bounds.y_hi);
  }

  // re-integrate so the reported triple is consistent under the final control
  StateTrajectory traj = forward_integrate(c0, u, net, atk, params);
  AdjointTrajectory adj = backward_integrate(traj, u, net, atk, params, w);
  const ObjectiveBreakdown obj = objective(traj, u, w, params);

  report.u_star = std::move(u);
  report.c_star = std::move(traj);
  report.lambda_star = std::move(adj);
  report.j_star = obj.j;
  report.loss_star = obj.loss;
  report.cost_star = obj.cost;
  report.iterations = iterations;
  report.converged = converged;
  report.y_switch_count = count_y_switches(report.u_star.y);
  return report;
}

}  // namespace aptctl
