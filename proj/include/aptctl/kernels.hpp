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

#ifndef APTCTL_KERNELS_HPP
#define APTCTL_KERNELS_HPP

#include <span>

#include "aptctl/matrix.hpp"
#include "aptctl/network.hpp"

namespace aptctl {

struct AttackStrategy;
struct Bounds;

namespace kernels {

// Hot per-node loops, each in a serial reference version and an
// OpenMP-parallel version. Both orders of evaluation are identical per node
// (no cross-node reductions), so the two variants produce bit-identical
// output; tests assert that and the public entry points dispatch on size.

// Parallelism pays only past these sizes; below them the fork/join overhead
// dominates the loop body.
inline constexpr int kMinNodesParallel = 512;
inline constexpr long kMinCellsParallel = 1 << 15;

void state_rhs_serial(std::span<const double> c, std::span<const double> x,
                      std::span<const double> y, const Network& net,
                      std::span<const double> attack, double beta,
                      std::span<double> out);
void state_rhs_parallel(std::span<const double> c, std::span<const double> x,
                        std::span<const double> y, const Network& net,
                        std::span<const double> attack, double beta,
                        std::span<double> out);

void adjoint_rhs_serial(std::span<const double> lambda,
                        std::span<const double> c, std::span<const double> x,
                        std::span<const double> y, const Network& net,
                        std::span<const double> attack, double beta,
                        std::span<const double> w, std::span<double> out);
void adjoint_rhs_parallel(std::span<const double> lambda,
                          std::span<const double> c, std::span<const double> x,
                          std::span<const double> y, const Network& net,
                          std::span<const double> attack, double beta,
                          std::span<const double> w, std::span<double> out);

// Control characterization for one grid row.
void characterize_row(std::span<const double> c, std::span<const double> lambda,
                      const Network& net, std::span<const double> attack,
                      double beta, const Bounds& bounds,
                      std::span<double> x_out, std::span<double> y_out);

// Control characterization over the whole grid (rows x nodes cells).
void characterize_grid_serial(const Matrix& c, const Matrix& lambda,
                              const Network& net,
                              std::span<const double> attack, double beta,
                              const Bounds& bounds, Matrix& x_out,
                              Matrix& y_out);
void characterize_grid_parallel(const Matrix& c, const Matrix& lambda,
                                const Network& net,
                                std::span<const double> attack, double beta,
                                const Bounds& bounds, Matrix& x_out,
                                Matrix& y_out);

}  // namespace kernels
}  // namespace aptctl

#endif  // APTCTL_KERNELS_HPP
