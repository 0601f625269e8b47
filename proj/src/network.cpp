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

#include "aptctl/network.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "aptctl/errors.hpp"

namespace aptctl {

Network Network::from_edges(int n,
                            const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) {
    throw InvalidParameterError("network needs at least one node, got n=" +
                                std::to_string(n));
  }
  Network net;
  net.n_ = n;
  net.out_.resize(n);
  net.in_.resize(n);
  for (const auto& [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n) {
      throw InvalidParameterError("edge (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") outside node range 0.." +
                                  std::to_string(n - 1));
    }
    if (i == j) {
      throw ValidationError("self-loop at node " + std::to_string(i));
    }
    net.out_[i].push_back(j);
    net.in_[j].push_back(i);
  }
  auto dedup = [](std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  for (auto& v : net.out_) dedup(v);
  for (auto& v : net.in_) dedup(v);

  net.weights_.resize(n);
  for (int i = 0; i < n; ++i) {
    net.weights_[i] = static_cast<double>(net.out_[i].size());
    net.edge_count_ += static_cast<int>(net.out_[i].size());
  }
  return net;
}

bool Network::has_edge(int i, int j) const {
  const auto& nbrs = out_[i];
  return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

std::vector<std::pair<int, int>> Network::edges() const {
  std::vector<std::pair<int, int>> result;
  result.reserve(edge_count_);
  for (int i = 0; i < n_; ++i) {
    for (int j : out_[i]) result.emplace_back(i, j);
  }
  return result;
}

Network load_edge_list(std::string_view text) {
  std::vector<std::pair<int, int>> edges;
  int max_id = -1;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    std::string content(line);
    if (content.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ss(content);
    long long i = 0, j = 0;
    if (!(ss >> i) || !(ss >> j)) {
      throw ParseError(line_no, "expected two node ids, got \"" + content + "\"");
    }
    std::string trailing;
    if (ss >> trailing) {
      throw ParseError(line_no, "trailing content \"" + trailing + "\"");
    }
    if (i < 0 || j < 0) {
      throw ParseError(line_no, "node ids must be nonnegative");
    }
    if (i == j) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": self-loop at node " + std::to_string(i));
    }
    edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    max_id = std::max(max_id, static_cast<int>(std::max(i, j)));
  }
  if (max_id < 0) {
    throw ParseError(line_no, "edge list holds no edges");
  }
  return Network::from_edges(max_id + 1, edges);
}

Network load_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open network file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_edge_list(buf.str());
}

std::string to_edge_list(const Network& net) {
  std::ostringstream out;
  for (const auto& [i, j] : net.edges()) {
    out << i << ' ' << j << '\n';
  }
  return out.str();
}

}  // namespace aptctl
