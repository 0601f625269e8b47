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

#include "aptctl/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aptctl/errors.hpp"
#include "aptctl/rng.hpp"

namespace aptctl {

namespace {

std::vector<std::pair<int, int>> as_directed(
    const std::vector<std::pair<int, int>>& undirected) {
  std::vector<std::pair<int, int>> directed;
  directed.reserve(2 * undirected.size());
  for (const auto& [i, j] : undirected) {
    directed.emplace_back(i, j);
    directed.emplace_back(j, i);
  }
  return directed;
}

// Union-find over node ids, for stitching generator output into one
// component.
class DisjointSet {
 public:
  explicit DisjointSet(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Network generate_scale_free(int n, int m, std::uint64_t seed) {
  if (m < 1 || n < m) {
    throw InvalidParameterError(
        "scale-free generator needs n >= m >= 1, got n=" + std::to_string(n) +
        " m=" + std::to_string(m));
  }
  Rng rng(split_seed(seed, 0x5f5f));

  const int core = std::min(n, std::max(2, m));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < core; ++i) {
    for (int j = i + 1; j < core; ++j) edges.emplace_back(i, j);
  }

  // One entry per degree unit; sampling from it is preferential attachment.
  std::vector<int> stubs;
  for (const auto& [i, j] : edges) {
    stubs.push_back(i);
    stubs.push_back(j);
  }

  std::vector<int> targets;
  for (int v = core; v < n; ++v) {
    targets.clear();
    while (static_cast<int>(targets.size()) < m) {
      const int candidate = stubs[rng.next_int(static_cast<int>(stubs.size()))];
      if (std::find(targets.begin(), targets.end(), candidate) ==
          targets.end()) {
        targets.push_back(candidate);
      }
    }
    for (int t : targets) {
      edges.emplace_back(v, t);
      stubs.push_back(v);
      stubs.push_back(t);
    }
  }
  return Network::from_edges(n, as_directed(edges));
}

Network generate_scale_free(int n, int m, double gamma, std::uint64_t seed) {
  if (m < 1 || n < m) {
    throw InvalidParameterError(
        "scale-free generator needs n >= m >= 1, got n=" + std::to_string(n) +
        " m=" + std::to_string(m));
  }
  if (!(gamma > 2.0)) {
    throw InvalidParameterError("power-law exponent must exceed 2, got " +
                                std::to_string(gamma));
  }
  Rng rng(split_seed(seed, 0x5f9a));

  if (n == 1) return Network::from_edges(1, {});

  // Static model: endpoint i drawn with probability ~ (i + i0)^(-alpha),
  // alpha = 1/(gamma - 1), which yields degree exponent gamma.
  const double alpha = 1.0 / (gamma - 1.0);
  const double offset = static_cast<double>(m);
  std::vector<double> cumulative(n);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    total += std::pow(static_cast<double>(i) + offset, -alpha);
    cumulative[i] = total;
  }
  auto draw_node = [&]() {
    const double r = rng.next_double() * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
    return static_cast<int>(std::min<std::ptrdiff_t>(
        it - cumulative.begin(), n - 1));
  };

  const long target_edges = std::min<long>(
      static_cast<long>(m) * n, static_cast<long>(n) * (n - 1) / 2);
  std::set<std::pair<int, int>> accepted;
  long attempts = 0;
  const long max_attempts = 400L * target_edges + 1000;
  while (static_cast<long>(accepted.size()) < target_edges &&
         attempts < max_attempts) {
    ++attempts;
    int i = draw_node();
    int j = draw_node();
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    accepted.insert({i, j});
  }
  if (static_cast<long>(accepted.size()) < target_edges) {
    throw InvalidParameterError(
        "scale-free generator could not place " + std::to_string(target_edges) +
        " edges for n=" + std::to_string(n) + " gamma=" + std::to_string(gamma));
  }

  std::vector<std::pair<int, int>> edges(accepted.begin(), accepted.end());

  // Bridge stray components into the one holding node 0 so the network is
  // connected; a handful of extra edges at most.
  DisjointSet components(n);
  for (const auto& [i, j] : edges) components.unite(i, j);
  for (int v = 1; v < n; ++v) {
    if (components.find(v) != components.find(0)) {
      int anchor = draw_node();
      while (components.find(anchor) != components.find(0)) {
        anchor = (anchor + 1) % n;
      }
      edges.emplace_back(v, anchor);
      components.unite(v, anchor);
    }
  }
  return Network::from_edges(n, as_directed(edges));
}

Network generate_small_world(int n, int k, double p, std::uint64_t seed) {
  if (k < 2 || k % 2 != 0) {
    throw InvalidParameterError("base degree k must be even and >= 2, got " +
                                std::to_string(k));
  }
  if (n <= k) {
    throw InvalidParameterError("small-world generator needs n > k, got n=" +
                                std::to_string(n) + " k=" + std::to_string(k));
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidParameterError("rewiring probability must lie in [0,1], got " +
                                std::to_string(p));
  }
  Rng rng(split_seed(seed, 0x3a77));

  // Ring lattice as an adjacency set; rewiring replaces the far endpoint of
  // each clockwise lattice edge.
  std::set<std::pair<int, int>> edge_set;
  auto key = [](int a, int b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  };
  for (int i = 0; i < n; ++i) {
    for (int d = 1; d <= k / 2; ++d) {
      edge_set.insert(key(i, (i + d) % n));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int d = 1; d <= k / 2; ++d) {
      const int old_target = (i + d) % n;
      if (rng.next_double() >= p) continue;
      if (!edge_set.count(key(i, old_target))) continue;  // already rewired away
      int fresh = -1;
      for (int tries = 0; tries < 8 * n; ++tries) {
        const int candidate = rng.next_int(n);
        if (candidate == i) continue;
        if (edge_set.count(key(i, candidate))) continue;
        fresh = candidate;
        break;
      }
      if (fresh < 0) continue;  // node saturated, keep the lattice edge
      edge_set.erase(key(i, old_target));
      edge_set.insert(key(i, fresh));
    }
  }

  std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());
  return Network::from_edges(n, as_directed(edges));
}

}  // namespace aptctl
