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

#include <algorithm>
#include <numeric>
#include <queue>
#include <vector>

#include "aptctl/errors.hpp"
#include "aptctl/generators.hpp"
#include "aptctl/network.hpp"

using namespace aptctl;

namespace {

int total_out_degree(const Network& net) {
  int sum = 0;
  for (int i = 0; i < net.size(); ++i) sum += net.weight(i);
  return sum;
}

bool is_connected_undirected(const Network& net) {
  const int n = net.size();
  std::vector<char> seen(n, 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int u : net.out_neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        frontier.push(u);
      }
    }
  }
  return reached == n;
}

// mean local clustering coefficient, treating the symmetric directed
// adjacency as an undirected graph
double mean_clustering(const Network& net) {
  double total = 0.0;
  for (int i = 0; i < net.size(); ++i) {
    const auto& nbrs = net.out_neighbors(i);
    const int d = static_cast<int>(nbrs.size());
    if (d < 2) continue;
    int links = 0;
    for (int a = 0; a < d; ++a) {
      for (int b = a + 1; b < d; ++b) {
        if (net.has_edge(nbrs[a], nbrs[b])) ++links;
      }
    }
    total += 2.0 * links / (d * (d - 1));
  }
  return total / net.size();
}

void check_weight_invariant(const Network& net) {
  for (int i = 0; i < net.size(); ++i) {
    CHECK(net.weight(i) == static_cast<int>(net.out_neighbors(i).size()));
    CHECK(net.loss_weights()[i] == doctest::Approx(net.weight(i)));
  }
}

}  // namespace

TEST_CASE("scale-free generator, tiny tree case") {
  // m=1 on three nodes is always a 2-edge tree: the 2-node core plus one
  // attachment
  const Network net = generate_scale_free(3, 1, 12345);
  CHECK(net.size() == 3);
  CHECK(net.edge_count() == 4);
  CHECK(is_connected_undirected(net));
  check_weight_invariant(net);
}

TEST_CASE("scale-free generator edge budget at n=100, m=2") {
  // 2-node core clique = 1 undirected edge, then 98 nodes x 2 edges;
  // every undirected edge contributes 2 to total out-degree
  const Network net = generate_scale_free(100, 2, 7);
  CHECK(net.size() == 100);
  CHECK(total_out_degree(net) == 2 * (2 * 98 + 1));
  CHECK(is_connected_undirected(net));
  check_weight_invariant(net);
}

TEST_CASE("scale-free generator rejects n < m") {
  CHECK_THROWS_AS(generate_scale_free(1, 2, 1), InvalidParameterError);
  CHECK_THROWS_AS(generate_scale_free(5, 0, 1), InvalidParameterError);
}

TEST_CASE("tunable-exponent generator validates gamma") {
  CHECK_THROWS_AS(generate_scale_free(50, 2, 2.0, 1), InvalidParameterError);
  CHECK_THROWS_AS(generate_scale_free(50, 2, 1.5, 1), InvalidParameterError);
}

TEST_CASE("tunable-exponent generator output") {
  const Network net = generate_scale_free(100, 2, 2.8, 99);
  CHECK(net.size() == 100);
  CHECK(is_connected_undirected(net));
  // m*n target edges plus at most a few bridges
  CHECK(total_out_degree(net) >= 2 * 200);
  CHECK(total_out_degree(net) <= 2 * 230);
  check_weight_invariant(net);

  // lower exponent concentrates degree: the hub should be well above the mean
  int max_deg = 0;
  for (int i = 0; i < net.size(); ++i) max_deg = std::max(max_deg, net.weight(i));
  CHECK(max_deg >= 3 * total_out_degree(net) / net.size() / 2);
}

TEST_CASE("generators are reproducible per seed") {
  CHECK(generate_scale_free(60, 2, 42) == generate_scale_free(60, 2, 42));
  CHECK_FALSE(generate_scale_free(60, 2, 42) == generate_scale_free(60, 2, 43));
  CHECK(generate_scale_free(60, 2, 3.1, 5) == generate_scale_free(60, 2, 3.1, 5));
  CHECK(generate_small_world(60, 4, 0.3, 9) ==
        generate_small_world(60, 4, 0.3, 9));
}

TEST_CASE("small-world p=0 is the ring lattice") {
  const Network net = generate_small_world(6, 2, 0.0, 4);
  CHECK(net.size() == 6);
  for (int i = 0; i < 6; ++i) {
    CHECK(net.weight(i) == 2);
    // circulant rows: neighbors are exactly the ring offsets
    CHECK(net.has_edge(i, (i + 1) % 6));
    CHECK(net.has_edge(i, (i + 5) % 6));
  }
  check_weight_invariant(net);
}

TEST_CASE("small-world rewiring preserves the edge count") {
  const Network net = generate_small_world(100, 4, 0.3, 17);
  CHECK(net.edge_count() == 2 * 200);
  check_weight_invariant(net);
}

TEST_CASE("full rewiring destroys lattice clustering") {
  const Network lattice = generate_small_world(100, 4, 0.0, 5);
  const Network random = generate_small_world(100, 4, 1.0, 5);
  CHECK(random.edge_count() == lattice.edge_count());
  // the k=4 lattice has clustering 0.5; a fully rewired graph sits near k/n
  CHECK(mean_clustering(lattice) == doctest::Approx(0.5));
  CHECK(mean_clustering(random) < mean_clustering(lattice) / 3.0);
}

TEST_CASE("small-world generator rejects bad parameters") {
  CHECK_THROWS_AS(generate_small_world(10, 3, 0.1, 1), InvalidParameterError);
  CHECK_THROWS_AS(generate_small_world(4, 4, 0.1, 1), InvalidParameterError);
  CHECK_THROWS_AS(generate_small_world(10, 4, 1.5, 1), InvalidParameterError);
  CHECK_THROWS_AS(generate_small_world(10, 4, -0.1, 1), InvalidParameterError);
}

TEST_CASE("edge list loading") {
  SUBCASE("two mutual edges") {
    const Network net = load_edge_list("0 1\n1 0");
    CHECK(net.size() == 2);
    CHECK(net.weight(0) == 1);
    CHECK(net.weight(1) == 1);
  }
  SUBCASE("duplicates collapse") {
    const Network net = load_edge_list("0 1\n0 1\n1 2");
    CHECK(net.size() == 3);
    CHECK(net.weight(0) == 1);
    CHECK(net.weight(1) == 1);
    CHECK(net.weight(2) == 0);
    CHECK(net.has_edge(0, 1));
    CHECK_FALSE(net.has_edge(1, 0));
  }
  SUBCASE("self-loop rejected") {
    CHECK_THROWS_AS(load_edge_list("2 2"), ValidationError);
  }
  SUBCASE("comments and blank lines") {
    const Network net = load_edge_list("# access map\n\n0 1 # main link\n1 2\n");
    CHECK(net.size() == 3);
    CHECK(net.edge_count() == 2);
  }
  SUBCASE("malformed line reports its number") {
    try {
      load_edge_list("0 1\n1 two\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("empty input is an error") {
    CHECK_THROWS_AS(load_edge_list("# nothing\n"), ParseError);
  }
  SUBCASE("network is sized by max id + 1") {
    const Network net = load_edge_list("0 5");
    CHECK(net.size() == 6);
    CHECK(net.weight(3) == 0);
  }
}

TEST_CASE("edge list round-trip") {
  const Network net = generate_small_world(40, 4, 0.25, 11);
  const Network reloaded = load_edge_list(to_edge_list(net));
  CHECK(net == reloaded);
}

TEST_CASE("weights equal adjacency row sums across generators") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    check_weight_invariant(generate_scale_free(50, 3, seed));
    check_weight_invariant(generate_scale_free(50, 2, 3.2, seed));
    check_weight_invariant(generate_small_world(50, 6, 0.4, seed));
  }
}
