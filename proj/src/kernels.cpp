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

#include "aptctl/kernels.hpp"

#include <cmath>

#include "aptctl/control.hpp"
#include "aptctl/dynamics.hpp"

namespace aptctl::kernels {

namespace {

// Body shared by both rhs variants. Infection pressure on node i sums the
// compromise probabilities of its in-neighbors.
inline double node_state_rhs(int i, std::span<const double> c,
                             std::span<const double> x,
                             std::span<const double> y, const Network& net,
                             std::span<const double> attack, double beta) {
  double pressure = 0.0;
  for (int j : net.in_neighbors(i)) pressure += c[j];
  pressure = attack[i] + beta * pressure;
  return pressure / x[i] * (1.0 - c[i]) - y[i] * c[i];
}

inline double node_adjoint_rhs(int i, std::span<const double> lambda,
                               std::span<const double> c,
                               std::span<const double> x,
                               std::span<const double> y, const Network& net,
                               std::span<const double> attack, double beta,
                               std::span<const double> w) {
  double pressure = 0.0;
  for (int j : net.in_neighbors(i)) pressure += c[j];
  pressure = attack[i] + beta * pressure;

  double coupling = 0.0;
  for (int j : net.out_neighbors(i)) {
    coupling += (1.0 - c[j]) * lambda[j] / x[j];
  }
  return -w[i] + y[i] * lambda[i] + lambda[i] / x[i] * pressure -
         beta * coupling;
}

inline void node_characterize(int i, std::span<const double> c,
                              std::span<const double> lambda,
                              const Network& net,
                              std::span<const double> attack, double beta,
                              const Bounds& b, double& x_out, double& y_out) {
  double pressure = 0.0;
  for (int j : net.in_neighbors(i)) pressure += c[j];
  pressure = attack[i] + beta * pressure;

  const double radicand = lambda[i] * pressure * (1.0 - c[i]);
  const double unclamped = std::sqrt(std::max(0.0, radicand));
  x_out = std::min(std::max(unclamped, b.x_lo), b.x_hi);
  y_out = (lambda[i] * c[i] > 1.0) ? b.y_hi : b.y_lo;
}

}  // namespace

void state_rhs_serial(std::span<const double> c, std::span<const double> x,
                      std::span<const double> y, const Network& net,
                      std::span<const double> attack, double beta,
                      std::span<double> out) {
  const int n = net.size();
  for (int i = 0; i < n; ++i) {
    out[i] = node_state_rhs(i, c, x, y, net, attack, beta);
  }
}

void state_rhs_parallel(std::span<const double> c, std::span<const double> x,
                        std::span<const double> y, const Network& net,
                        std::span<const double> attack, double beta,
                        std::span<double> out) {
  const int n = net.size();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    out[i] = node_state_rhs(i, c, x, y, net, attack, beta);
  }
}

void adjoint_rhs_serial(std::span<const double> lambda,
                        std::span<const double> c, std::span<const double> x,
                        std::span<const double> y, const Network& net,
                        std::span<const double> attack, double beta,
                        std::span<const double> w, std::span<double> out) {
  const int n = net.size();
  for (int i = 0; i < n; ++i) {
    out[i] = node_adjoint_rhs(i, lambda, c, x, y, net, attack, beta, w);
  }
}

void adjoint_rhs_parallel(std::span<const double> lambda,
                          std::span<const double> c, std::span<const double> x,
                          std::span<const double> y, const Network& net,
                          std::span<const double> attack, double beta,
                          std::span<const double> w, std::span<double> out) {
  const int n = net.size();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    out[i] = node_adjoint_rhs(i, lambda, c, x, y, net, attack, beta, w);
  }
}

void characterize_row(std::span<const double> c, std::span<const double> lambda,
                      const Network& net, std::span<const double> attack,
                      double beta, const Bounds& bounds,
                      std::span<double> x_out, std::span<double> y_out) {
  const int n = net.size();
  for (int i = 0; i < n; ++i) {
    node_characterize(i, c, lambda, net, attack, beta, bounds, x_out[i],
                      y_out[i]);
  }
}

void characterize_grid_serial(const Matrix& c, const Matrix& lambda,
                              const Network& net,
                              std::span<const double> attack, double beta,
                              const Bounds& bounds, Matrix& x_out,
                              Matrix& y_out) {
  const int rows = c.rows();
  for (int k = 0; k < rows; ++k) {
    characterize_row(c.row(k), lambda.row(k), net, attack, beta, bounds,
                     x_out.row(k), y_out.row(k));
  }
}

void characterize_grid_parallel(const Matrix& c, const Matrix& lambda,
                                const Network& net,
                                std::span<const double> attack, double beta,
                                const Bounds& bounds, Matrix& x_out,
                                Matrix& y_out) {
  const int rows = c.rows();
  const int n = net.size();
#pragma omp parallel for schedule(static)
  for (int k = 0; k < rows; ++k) {
    const auto c_row = c.row(k);
    const auto l_row = lambda.row(k);
    auto x_row = x_out.row(k);
    auto y_row = y_out.row(k);
    for (int i = 0; i < n; ++i) {
      node_characterize(i, c_row, l_row, net, attack, beta, bounds, x_row[i],
                        y_row[i]);
    }
  }
}

}  // namespace aptctl::kernels
