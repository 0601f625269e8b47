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

#ifndef APTCTL_GENERATORS_HPP
#define APTCTL_GENERATORS_HPP

#include <cstdint>

#include "aptctl/network.hpp"

namespace aptctl {

/// Scale-free network by preferential attachment (exponent ~3).
///
/// Seeding convention: start from a clique on min(n, max(2, m)) nodes, then
/// attach each remaining node to m distinct existing nodes chosen with
/// probability proportional to current degree. Every undirected edge is
/// stored as two directed edges. Deterministic per seed; always connected.
///
/// Requires n >= m >= 1.
Network generate_scale_free(int n, int m, std::uint64_t seed);

/// Scale-free network with a tunable power-law exponent gamma > 2.
///
/// Static (configuration-style) model: node i carries sampling weight
/// (i + i0)^(-1/(gamma-1)) with i0 = m, and m*n distinct undirected edges
/// are drawn with endpoint probability proportional to weight. Components
/// are then joined into the largest one by single bridge edges, so the
/// result is connected. Deterministic per seed.
///
/// Requires n >= m >= 1 and gamma > 2.
Network generate_scale_free(int n, int m, double gamma, std::uint64_t seed);

/// Small-world network: ring lattice where every node is joined to its k
/// nearest neighbors (k even), then each lattice edge is rewired to a
/// uniformly random target with probability p. Rewiring preserves the edge
/// count n*k/2; undirected edges are stored as directed pairs.
///
/// Requires n > k >= 2, k even, 0 <= p <= 1.
Network generate_small_world(int n, int k, double p, std::uint64_t seed);

}  // namespace aptctl

#endif  // APTCTL_GENERATORS_HPP
