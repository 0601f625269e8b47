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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "aptctl/control.hpp"
#include "aptctl/dynamics.hpp"
#include "aptctl/errors.hpp"
#include "aptctl/generators.hpp"
#include "aptctl/metrics.hpp"
#include "aptctl/rng.hpp"

using namespace aptctl;

TEST_CASE("state rhs, isolated node") {
  const Network net = Network::from_edges(1, {});
  const AttackStrategy atk{{0.1}};
  std::vector<double> c{0.1}, x{0.5}, y{0.2}, out(1);

  state_rhs(c, x, y, net, atk, 0.5, out);
  // (0.1/0.5)(1-0.1) - 0.2*0.1
  CHECK(out[0] == doctest::Approx(0.16).epsilon(1e-12));
}

TEST_CASE("state rhs vanishes at full compromise with no recovery") {
  const Network net = Network::from_edges(1, {});
  const AttackStrategy atk{{0.3}};
  std::vector<double> c{1.0}, x{0.5}, y{0.0}, out(1);
  state_rhs(c, x, y, net, atk, 0.9, out);
  CHECK(out[0] == doctest::Approx(0.0));
}

TEST_CASE("state rhs carries infection along an edge") {
  // directed edge 0 -> 1 only; pressure on node 1 is a_1 + beta*C_0
  const Network net = Network::from_edges(2, {{0, 1}});
  const AttackStrategy atk{{0.0, 0.1}};
  std::vector<double> c{0.5, 0.0}, x{1.0, 0.1}, y{0.0, 0.0}, out(2);
  state_rhs(c, x, y, net, atk, 0.001, out);
  CHECK(out[1] == doctest::Approx((0.1 + 0.001 * 0.5) / 0.1).epsilon(1e-12));
  // node 0 has no in-edges
  CHECK(out[0] == doctest::Approx(0.0));
}

TEST_CASE("state rhs guards against zero prevention") {
  const Network net = Network::from_edges(1, {});
  const AttackStrategy atk{{0.1}};
  std::vector<double> c{0.1}, x{0.0}, y{0.2}, out(1);
  CHECK_THROWS_AS(state_rhs(c, x, y, net, atk, 0.5, out), DivisionGuardError);
}

TEST_CASE("forward Euler matches the scalar closed form") {
  // dC/dt = (0.1/0.5)(1-C) - 0.3 C = 0.2 - 0.5 C, C(0)=0
  // => C(t) = 0.4 (1 - exp(-0.5 t))
  const Network net = Network::from_edges(1, {});
  const AttackStrategy atk{{0.1}};
  ModelParams params{0.001, 2.0, 2000};
  const ControlTrajectory u =
      static_control(0.5, 0.3, params, 1, Bounds{0.1, 0.7, 0.1, 0.7});

  const std::vector<double> c0{0.0};
  const StateTrajectory traj = forward_integrate(c0, u, net, atk, params);

  double max_err = 0.0;
  for (int k = 0; k <= params.steps; ++k) {
    const double t = k * params.dt();
    const double exact = 0.4 * (1.0 - std::exp(-0.5 * t));
    max_err = std::max(max_err, std::abs(traj.values(k, 0) - exact));
  }
  CHECK(max_err <= 1e-4);
  CHECK(traj.values(params.steps, 0) == doctest::Approx(0.252848).epsilon(1e-3));
}

TEST_CASE("zero attack keeps a clean network clean") {
  const Network net = generate_small_world(20, 4, 0.2, 3);
  const AttackStrategy atk{std::vector<double>(20, 0.0)};
  ModelParams params{0.5, 5.0, 500};
  const ControlTrajectory u =
      static_control(0.4, 0.4, params, 20, Bounds{0.1, 0.7, 0.1, 0.7});
  const StateTrajectory traj =
      forward_integrate(std::vector<double>(20, 0.0), u, net, atk, params);
  for (double v : traj.values.flat()) CHECK(v == 0.0);
}

TEST_CASE("forward invariance on a generated instance") {
  const Network net = generate_scale_free(100, 2, 21);
  const AttackStrategy atk{std::vector<double>(100, 0.1)};
  ModelParams params{0.001, 20.0, 2000};
  const Bounds bounds{0.1, 0.7, 0.1, 0.7};

  // random admissible control
  Rng rng(77);
  ControlTrajectory u{Matrix(params.steps + 1, 100), Matrix(params.steps + 1, 100)};
  for (auto& v : u.x.flat()) v = bounds.x_lo + rng.next_double() * (bounds.x_hi - bounds.x_lo);
  for (auto& v : u.y.flat()) v = bounds.y_lo + rng.next_double() * (bounds.y_hi - bounds.y_lo);

  const StateTrajectory traj =
      forward_integrate(std::vector<double>(100, 0.1), u, net, atk, params);
  for (double v : traj.values.flat()) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("coarse grids with violent dynamics raise a step-size error") {
  const Network net = Network::from_edges(1, {});
  const AttackStrategy atk{{50.0}};
  ModelParams params{0.001, 10.0, 10};  // dt = 1, rate = 50/0.1 = 500
  const ControlTrajectory u =
      static_control(0.1, 0.1, params, 1, Bounds{0.1, 0.7, 0.1, 0.7});
  CHECK_THROWS_AS(
      forward_integrate(std::vector<double>{0.0}, u, net, atk, params),
      StepSizeError);
}

TEST_CASE("adjoint rhs, isolated node") {
  const Network net = Network::from_edges(1, {});
  const AttackStrategy atk{{0.1}};
  std::vector<double> lambda{1.0}, c{0.5}, x{0.5}, y{0.2}, w{0.0}, out(1);
  adjoint_rhs(lambda, c, x, y, net, atk, 0.7, w, out);
  // 0.2*1 + (1/0.5)*0.1
  CHECK(out[0] == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("adjoint rhs at lambda = 0 reduces to -w") {
  const Network net = generate_small_world(10, 2, 0.0, 2);
  const AttackStrategy atk{std::vector<double>(10, 0.3)};
  std::vector<double> lambda(10, 0.0), c(10, 0.4), x(10, 0.5), y(10, 0.2),
      out(10);
  adjoint_rhs(lambda, c, x, y, net, atk, 0.4, net.loss_weights(), out);
  for (int i = 0; i < 10; ++i) {
    CHECK(out[i] == doctest::Approx(-net.loss_weights()[i]));
  }
}

TEST_CASE("adjoint rhs carries the downstream coupling term") {
  // edge 0 -> 1; with lambda_0 = 0 and w_0 = 0 only the coupling term
  // -beta (1 - C_1) lambda_1 / x_1 survives for node 0
  const Network net = Network::from_edges(2, {{0, 1}});
  const AttackStrategy atk{{0.0, 0.0}};
  std::vector<double> lambda{0.0, 1.0}, c{0.3, 0.0}, x{0.5, 0.1}, y{0.0, 0.0},
      w{0.0, 0.0}, out(2);
  adjoint_rhs(lambda, c, x, y, net, atk, 0.001, w, out);
  CHECK(out[0] == doctest::Approx(-0.01).epsilon(1e-12));
}

TEST_CASE("backward integration terminal row is exactly zero") {
  const Network net = generate_scale_free(30, 2, 5);
  const AttackStrategy atk{std::vector<double>(30, 0.1)};
  ModelParams params{0.001, 20.0, 400};
  const ControlTrajectory u =
      static_control(0.4, 0.4, params, 30, Bounds{0.1, 0.7, 0.1, 0.7});
  const StateTrajectory traj =
      forward_integrate(std::vector<double>(30, 0.1), u, net, atk, params);
  const AdjointTrajectory adj =
      backward_integrate(traj, u, net, atk, params, net.loss_weights());
  for (int i = 0; i < 30; ++i) {
    CHECK(adj.values(params.steps, i) == 0.0);  // bit-exact
  }
}

TEST_CASE("zero weights and zero attack give a zero adjoint") {
  const Network net = Network::from_edges(1, {});
  const AttackStrategy atk{{0.0}};
  ModelParams params{0.001, 5.0, 100};
  const ControlTrajectory u =
      static_control(0.3, 0.3, params, 1, Bounds{0.1, 0.7, 0.1, 0.7});
  const StateTrajectory traj =
      forward_integrate(std::vector<double>{0.0}, u, net, atk, params);
  const AdjointTrajectory adj =
      backward_integrate(traj, u, net, atk, params, std::vector<double>{0.0});
  for (double v : adj.values.flat()) CHECK(v == 0.0);
}

TEST_CASE("backward Euler matches the frozen-coefficient closed form") {
  // constant C = 0.5, x = 0.5, y = 0.2, a = 0.1, beta = 0, w = 2:
  // dlambda/dt = -2 + lambda (0.2 + 0.1/0.5) = -2 + 0.4 lambda
  // => lambda(t) = 5 (1 - exp(-0.4 (T - t)))
  const Network net = Network::from_edges(1, {});
  const AttackStrategy atk{{0.1}};
  const std::vector<double> w{2.0};

  auto max_error_at = [&](int steps) {
    ModelParams params{1e-9, 2.0, steps};  // beta ~ 0 (must be positive)
    const ControlTrajectory u =
        static_control(0.5, 0.2, params, 1, Bounds{0.1, 0.7, 0.1, 0.7});
    StateTrajectory traj{Matrix(steps + 1, 1, 0.5)};
    const AdjointTrajectory adj =
        backward_integrate(traj, u, net, atk, params, w);
    double max_err = 0.0;
    for (int k = 0; k <= steps; ++k) {
      const double t = k * params.dt();
      const double exact = 5.0 * (1.0 - std::exp(-0.4 * (2.0 - t)));
      max_err = std::max(max_err, std::abs(adj.values(k, 0) - exact));
    }
    return max_err;
  };

  // first-order convergence: error ~ w*dt/(2e) near t = T
  CHECK(max_error_at(2000) < 1e-3);
  CHECK(max_error_at(20000) < 1e-4);
  CHECK(max_error_at(2000) / max_error_at(20000) > 5.0);
}

TEST_CASE("grid refinement changes J at first order") {
  const Network net = generate_small_world(12, 4, 0.2, 8);
  const AttackStrategy atk{std::vector<double>(12, 0.2)};
  const Bounds bounds{0.1, 0.7, 0.1, 0.7};

  auto j_at = [&](int steps) {
    ModelParams params{0.01, 20.0, steps};
    const ControlTrajectory u = static_control(0.2, 0.3, params, 12, bounds);
    const StateTrajectory traj = forward_integrate(
        std::vector<double>(12, 0.1), u, net, atk, params);
    return objective(traj, u, net.loss_weights(), params).j;
  };

  const double j1 = j_at(100), j2 = j_at(200), j4 = j_at(400);
  const double ratio = (j2 - j4) / (j1 - j2);
  CHECK(ratio > 0.3);
  CHECK(ratio < 0.7);
}

TEST_CASE("unreachable unattacked nodes decay at their recovery rate") {
  // node 0 has only out-edges, no attack: C_0(t) = C_0(0) exp(-y t)
  const Network net = Network::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  const AttackStrategy atk{{0.0, 0.1, 0.1}};
  ModelParams params{0.001, 10.0, 10000};
  const ControlTrajectory u =
      static_control(0.3, 0.25, params, 3, Bounds{0.1, 0.7, 0.1, 0.7});
  const StateTrajectory traj = forward_integrate(
      std::vector<double>{0.8, 0.1, 0.1}, u, net, atk, params);
  for (int k = 0; k <= params.steps; k += 500) {
    const double t = k * params.dt();
    CHECK(traj.values(k, 0) ==
          doctest::Approx(0.8 * std::exp(-0.25 * t)).epsilon(1e-3));
  }
}

TEST_CASE("grid mismatches are dimension errors") {
  const Network net = Network::from_edges(2, {{0, 1}});
  const AttackStrategy atk{{0.1, 0.1}};
  ModelParams params{0.001, 5.0, 100};
  const ControlTrajectory u =
      static_control(0.4, 0.4, params, 2, Bounds{0.1, 0.7, 0.1, 0.7});

  ModelParams other = params;
  other.steps = 50;
  CHECK_THROWS_AS(
      forward_integrate(std::vector<double>{0.1, 0.1}, u, net, atk, other),
      DimensionError);

  const StateTrajectory traj =
      forward_integrate(std::vector<double>{0.1, 0.1}, u, net, atk, params);
  CHECK_THROWS_AS(
      backward_integrate(traj, u, net, atk, params, std::vector<double>{1.0}),
      DimensionError);
}

TEST_CASE("initial states outside [0,1] are rejected") {
  const Network net = Network::from_edges(1, {});
  const AttackStrategy atk{{0.1}};
  ModelParams params{0.001, 1.0, 10};
  const ControlTrajectory u =
      static_control(0.4, 0.4, params, 1, Bounds{0.1, 0.7, 0.1, 0.7});
  CHECK_THROWS_AS(
      forward_integrate(std::vector<double>{1.2}, u, net, atk, params),
      ValidationError);
}
