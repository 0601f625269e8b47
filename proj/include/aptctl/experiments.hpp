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

#ifndef APTCTL_EXPERIMENTS_HPP
#define APTCTL_EXPERIMENTS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aptctl/fbsm.hpp"
#include "aptctl/generators.hpp"
#include "aptctl/metrics.hpp"

namespace aptctl {

/// Where a problem's network comes from: an edge-list file or a generator.
struct NetworkSource {
  enum class Kind { EdgeListFile, ScaleFree, SmallWorld };

  Kind kind = Kind::ScaleFree;
  std::string path;                  // EdgeListFile
  int n = 100;
  int m = 2;                         // scale-free attachment count
  std::optional<double> gamma;       // set: tunable-exponent scale-free
  int k = 4;                         // small-world base degree
  double p = 0.2;                    // small-world rewiring probability

  /// Short human-readable tag ("scale-free(n=100,m=2)", file stem, ...).
  std::string label() const;
};

Network build_network(const NetworkSource& src, std::uint64_t seed);

/// Per-node values given either inline (size 1 broadcasts to N) or as a
/// file with one value per line ('#' comments allowed).
struct NodeValues {
  std::vector<double> values{};
  std::string path{};

  std::vector<double> resolve(int n) const;
};

/// Full problem statement: network source plus every model, bound, and
/// solver setting. All randomness flows from `seed`, stream-split per
/// consumer.
struct ProblemSpec {
  NetworkSource network;
  NodeValues attack{{0.1}, {}};
  NodeValues c0{{0.1}, {}};
  ModelParams params{};
  Bounds bounds{};
  SolverConfig solver{};
  std::uint64_t seed = 1;
};

struct BuiltInstance {
  Network net;
  AttackStrategy atk;
  std::vector<double> c0;
  ModelParams params;
  Bounds bounds;
  SolverConfig solver;
  std::string network_label;
};

BuiltInstance build_instance(const ProblemSpec& spec);

/// One strategy's scorecard in a baseline comparison.
struct StrategyResult {
  std::string label;
  double x_level = 0.0;  // static strategies only
  double y_level = 0.0;
  bool is_static = false;
  double j = 0.0;
  double loss = 0.0;
  double cost = 0.0;
  bool converged = true;
  std::vector<double> ce;
  std::vector<double> sc;
};

struct CompareResult {
  std::vector<double> times;
  std::vector<StrategyResult> rows;  // sorted by j ascending
};

/// Solves the optimal control and evaluates the three static baselines
/// (lower bounds, box midpoint, upper bounds) on the same instance.
CompareResult run_baseline_compare(const BuiltInstance& inst);

enum class SweepScenario {
  BoundsX,
  BoundsY,
  ScaleFreeGamma,
  SmallWorldP,
  BaselineCompare,
};

std::string to_string(SweepScenario s);
std::optional<SweepScenario> parse_scenario(const std::string& s);

/// One grid point: (lo, hi) for bound scenarios, value in `a` for topology
/// scenarios.
struct SweepPoint {
  double a = 0.0;
  double b = 0.0;
};

struct SweepSpec {
  SweepScenario scenario = SweepScenario::BoundsX;
  ProblemSpec base;
  std::vector<SweepPoint> grid;
  int replicates = 1;  // networks per point (topology scenarios)
};

struct SweepRow {
  SweepPoint point;
  double ol = 0.0;  // means over effective replicates
  double oc = 0.0;
  double oj = 0.0;
  double converged_fraction = 0.0;
  int replicates_requested = 0;
  int replicates_effective = 0;
  std::vector<std::uint64_t> seeds;
  std::vector<std::array<double, 3>> replicate_values;  // (ol, oc, oj) each
  bool skipped = false;
  std::string reason;
};

/// Re-solves the base instance once per (lo, hi) bound pair. The network is
/// built once and shared; invalid pairs (lo > hi, lo <= 0) produce skipped
/// rows. Rows execute in parallel and are keyed by grid position.
std::vector<SweepRow> run_bound_sweep(const SweepSpec& spec);

/// Generates `replicates` networks per parameter point with split seeds,
/// solves each, and averages Loss*, Cost*, J*. Generation failures skip the
/// replicate and are reported in the row.
std::vector<SweepRow> run_topology_sweep(const SweepSpec& spec);

/// Default 7x7 (lo, hi) grid over [0.1, 0.7]^2; invalid cells are kept and
/// skipped by run_bound_sweep so the emitted table shows them.
std::vector<SweepPoint> default_bound_grid();

/// Spearman rank correlation with average ranks on ties.
double spearman(std::span<const double> xs, std::span<const double> ys);

}  // namespace aptctl

#endif  // APTCTL_EXPERIMENTS_HPP
