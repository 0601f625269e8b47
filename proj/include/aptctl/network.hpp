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

#ifndef APTCTL_NETWORK_HPP
#define APTCTL_NETWORK_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aptctl {

/// Directed access network. Edge i->j means system i can reach system j.
///
/// Immutable after construction and safe to share across concurrent solver
/// runs. The adjacency is binary with an empty diagonal; per-node loss
/// weights equal the out-degree by construction.
class Network {
 public:
  /// Builds a network from a directed edge list. Duplicate edges collapse
  /// to one; self-loops are rejected with a ValidationError.
  static Network from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const { return n_; }

  const std::vector<int>& out_neighbors(int i) const { return out_[i]; }
  const std::vector<int>& in_neighbors(int i) const { return in_[i]; }

  /// Loss weight w_i = out-degree of node i.
  int weight(int i) const { return static_cast<int>(out_[i].size()); }
  const std::vector<double>& loss_weights() const { return weights_; }

  bool has_edge(int i, int j) const;

  /// Directed edge count (each stored undirected edge counts twice).
  int edge_count() const { return edge_count_; }

  /// All directed edges, sorted by (source, target).
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Network& a, const Network& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  Network() = default;

  int n_ = 0;
  int edge_count_ = 0;
  std::vector<std::vector<int>> out_;  // sorted adjacency lists
  std::vector<std::vector<int>> in_;
  std::vector<double> weights_;        // out-degrees, cached as doubles
};

/// Parses the plain edge-list text format: one "i j" pair of 0-based node
/// ids per line, '#' starts a comment, blank lines ignored. The network is
/// sized by (max id + 1). Malformed lines raise ParseError with the line
/// number; self-loops raise ValidationError.
Network load_edge_list(std::string_view text);

/// Reads a file and delegates to load_edge_list.
Network load_edge_list_file(const std::string& path);

/// Renders a network in the same edge-list format (one directed edge per
/// line, sorted by source then target).
std::string to_edge_list(const Network& net);

}  // namespace aptctl

#endif  // APTCTL_NETWORK_HPP
