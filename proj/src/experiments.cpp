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

#include "aptctl/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "aptctl/errors.hpp"
#include "aptctl/rng.hpp"

namespace aptctl {

namespace {

std::string trim_stem(const std::string& path) {
  const std::size_t slash = path.find_last_of("/\\");
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

}  // namespace

std::string NetworkSource::label() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::EdgeListFile:
      out << trim_stem(path);
      break;
    case Kind::ScaleFree:
      out << "scale-free(n=" << n << ",m=" << m;
      if (gamma) out << ",gamma=" << *gamma;
      out << ")";
      break;
    case Kind::SmallWorld:
      out << "small-world(n=" << n << ",k=" << k << ",p=" << p << ")";
      break;
  }
  return out.str();
}

Network build_network(const NetworkSource& src, std::uint64_t seed) {
  switch (src.kind) {
    case NetworkSource::Kind::EdgeListFile:
      return load_edge_list_file(src.path);
    case NetworkSource::Kind::ScaleFree:
      return src.gamma ? generate_scale_free(src.n, src.m, *src.gamma, seed)
                       : generate_scale_free(src.n, src.m, seed);
    case NetworkSource::Kind::SmallWorld:
      return generate_small_world(src.n, src.k, src.p, seed);
  }
  throw InvalidParameterError("unknown network source");
}

std::vector<double> NodeValues::resolve(int n) const {
  std::vector<double> v = values;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open per-node value file: " + path);
    v.clear();
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const std::size_t hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        std::size_t used = 0;
        const double d = std::stod(line, &used);
        if (line.find_first_not_of(" \t\r", used) != std::string::npos) {
          throw std::invalid_argument("trailing content");
        }
        v.push_back(d);
      } catch (const std::exception&) {
        throw ParseError(line_no, path + ": expected one number, got \"" +
                                      line + "\"");
      }
    }
  }
  if (v.size() == 1) v.assign(n, v[0]);
  if (static_cast<int>(v.size()) != n) {
    throw DimensionError("per-node values: got " + std::to_string(v.size()) +
                         " entries for " + std::to_string(n) + " nodes");
  }
  return v;
}

BuiltInstance build_instance(const ProblemSpec& spec) {
  spec.params.validate();
  spec.bounds.validate();
  spec.solver.validate();
  Network net = build_network(spec.network, split_seed(spec.seed, 0));
  const int n = net.size();
  BuiltInstance inst{std::move(net),
                     AttackStrategy{spec.attack.resolve(n)},
                     spec.c0.resolve(n),
                     spec.params,
                     spec.bounds,
                     spec.solver,
                     spec.network.label()};
  inst.atk.validate(n);
  for (int i = 0; i < n; ++i) {
    if (!(inst.c0[i] >= 0.0 && inst.c0[i] <= 1.0)) {
      throw ValidationError("initial state C0[" + std::to_string(i) + "] = " +
                            std::to_string(inst.c0[i]) + " outside [0,1]");
    }
  }
  return inst;
}

CompareResult run_baseline_compare(const BuiltInstance& inst) {
  const int n = inst.net.size();
  const auto& w = inst.net.loss_weights();

  CompareResult result;
  result.times.resize(inst.params.steps + 1);
  for (int k = 0; k <= inst.params.steps; ++k) {
    result.times[k] = k * inst.params.dt();
  }

  // optimal control
  {
    SolveReport report = solve(inst.net, inst.atk, inst.params, inst.bounds,
                               inst.c0, inst.solver);
    const DiagnosticCurves dc =
        curves(report.c_star, report.u_star, w, inst.params);
    StrategyResult row;
    row.label = "optimal";
    row.is_static = false;
    row.j = report.j_star;
    row.loss = report.loss_star;
    row.cost = report.cost_star;
    row.converged = report.converged;
    row.ce = dc.ce;
    row.sc = dc.sc;
    result.rows.push_back(std::move(row));
  }

  const double x_mid = 0.5 * (inst.bounds.x_lo + inst.bounds.x_hi);
  const double y_mid = 0.5 * (inst.bounds.y_lo + inst.bounds.y_hi);
  const struct {
    const char* label;
    double x, y;
  } statics[] = {
      {"static_lo", inst.bounds.x_lo, inst.bounds.y_lo},
      {"static_mid", x_mid, y_mid},
      {"static_hi", inst.bounds.x_hi, inst.bounds.y_hi},
  };
  for (const auto& s : statics) {
    const ControlTrajectory u =
        static_control(s.x, s.y, inst.params, n, inst.bounds);
    const StateTrajectory traj =
        forward_integrate(inst.c0, u, inst.net, inst.atk, inst.params);
    const ObjectiveBreakdown obj = objective(traj, u, w, inst.params);
    const DiagnosticCurves dc = curves(traj, u, w, inst.params);
    StrategyResult row;
    row.label = s.label;
    row.x_level = s.x;
    row.y_level = s.y;
    row.is_static = true;
    row.j = obj.j;
    row.loss = obj.loss;
    row.cost = obj.cost;
    row.converged = true;
    row.ce = dc.ce;
    row.sc = dc.sc;
    result.rows.push_back(std::move(row));
  }

  std::stable_sort(result.rows.begin(), result.rows.end(),
                   [](const StrategyResult& a, const StrategyResult& b) {
                     return a.j < b.j;
                   });
  return result;
}

std::string to_string(SweepScenario s) {
  switch (s) {
    case SweepScenario::BoundsX: return "bounds-x";
    case SweepScenario::BoundsY: return "bounds-y";
    case SweepScenario::ScaleFreeGamma: return "scale-free-gamma";
    case SweepScenario::SmallWorldP: return "small-world-p";
    case SweepScenario::BaselineCompare: return "baseline-compare";
  }
  return "unknown";
}

std::optional<SweepScenario> parse_scenario(const std::string& s) {
  if (s == "bounds-x") return SweepScenario::BoundsX;
  if (s == "bounds-y") return SweepScenario::BoundsY;
  if (s == "scale-free-gamma") return SweepScenario::ScaleFreeGamma;
  if (s == "small-world-p") return SweepScenario::SmallWorldP;
  if (s == "baseline-compare") return SweepScenario::BaselineCompare;
  return std::nullopt;
}

std::vector<SweepPoint> default_bound_grid() {
  std::vector<SweepPoint> grid;
  for (int a = 0; a < 7; ++a) {
    for (int b = 0; b < 7; ++b) {
      grid.push_back({0.1 * (a + 1), 0.1 * (b + 1)});
    }
  }
  return grid;
}

namespace {

struct ReplicateOutcome {
  bool ok = false;
  bool converged = false;
  double ol = 0.0, oc = 0.0, oj = 0.0;
  std::string error;
};

ReplicateOutcome solve_once(const Network& net, const AttackStrategy& atk,
                            const ModelParams& params, const Bounds& bounds,
                            const std::vector<double>& c0,
                            const SolverConfig& solver) {
  ReplicateOutcome out;
  try {
    SolveReport report = solve(net, atk, params, bounds, c0, solver);
    out.ok = true;
    out.converged = report.converged;
    out.ol = report.loss_star;
    out.oc = report.cost_star;
    out.oj = report.j_star;
  } catch (const Error& e) {
    out.error = e.what();
  }
  return out;
}

void finish_row(SweepRow& row, const std::vector<ReplicateOutcome>& outcomes) {
  int effective = 0;
  int converged = 0;
  double ol = 0.0, oc = 0.0, oj = 0.0;
  for (const auto& o : outcomes) {
    if (!o.ok) {
      if (row.reason.empty()) row.reason = o.error;
      continue;
    }
    ++effective;
    if (o.converged) ++converged;
    ol += o.ol;
    oc += o.oc;
    oj += o.oj;
    row.replicate_values.push_back({o.ol, o.oc, o.oj});
  }
  row.replicates_effective = effective;
  if (effective == 0) {
    row.skipped = true;
    if (row.reason.empty()) row.reason = "no replicate succeeded";
    return;
  }
  row.ol = ol / effective;
  row.oc = oc / effective;
  row.oj = oj / effective;
  row.converged_fraction = static_cast<double>(converged) / effective;
}

}  // namespace

std::vector<SweepRow> run_bound_sweep(const SweepSpec& spec) {
  if (spec.scenario != SweepScenario::BoundsX &&
      spec.scenario != SweepScenario::BoundsY) {
    throw InvalidParameterError("run_bound_sweep expects a bounds scenario");
  }
  if (spec.grid.empty()) {
    throw InvalidParameterError("sweep grid is empty");
  }
  const bool sweep_x = spec.scenario == SweepScenario::BoundsX;

  // one shared network and attack/initial-state resolution for all points
  const BuiltInstance base = build_instance(spec.base);
  const std::uint64_t net_seed = split_seed(spec.base.seed, 0);

  const int points = static_cast<int>(spec.grid.size());
  std::vector<SweepRow> rows(points);

#pragma omp parallel for schedule(dynamic)
  for (int idx = 0; idx < points; ++idx) {
    SweepRow& row = rows[idx];
    row.point = spec.grid[idx];
    row.replicates_requested = 1;
    row.seeds = {net_seed};

    Bounds bounds = base.bounds;
    if (sweep_x) {
      bounds.x_lo = row.point.a;
      bounds.x_hi = row.point.b;
    } else {
      bounds.y_lo = row.point.a;
      bounds.y_hi = row.point.b;
    }
    try {
      bounds.validate();
    } catch (const Error& e) {
      row.skipped = true;
      row.reason = e.what();
      continue;
    }
    const ReplicateOutcome outcome = solve_once(base.net, base.atk, base.params,
                                                bounds, base.c0, base.solver);
    finish_row(row, {outcome});
  }
  return rows;
}

std::vector<SweepRow> run_topology_sweep(const SweepSpec& spec) {
  if (spec.scenario != SweepScenario::ScaleFreeGamma &&
      spec.scenario != SweepScenario::SmallWorldP) {
    throw InvalidParameterError("run_topology_sweep expects a topology scenario");
  }
  if (spec.grid.empty()) {
    throw InvalidParameterError("sweep grid is empty");
  }
  if (spec.replicates < 1) {
    throw InvalidParameterError("need at least one replicate per point");
  }
  const bool gamma_sweep = spec.scenario == SweepScenario::ScaleFreeGamma;
  if (gamma_sweep &&
      spec.base.network.kind != NetworkSource::Kind::ScaleFree) {
    throw InvalidParameterError(
        "scale-free-gamma sweep needs a scale-free network source");
  }
  if (!gamma_sweep &&
      spec.base.network.kind != NetworkSource::Kind::SmallWorld) {
    throw InvalidParameterError(
        "small-world-p sweep needs a small-world network source");
  }
  spec.base.params.validate();
  spec.base.bounds.validate();
  spec.base.solver.validate();

  const int points = static_cast<int>(spec.grid.size());
  const int reps = spec.replicates;
  std::vector<SweepRow> rows(points);
  std::vector<ReplicateOutcome> outcomes(
      static_cast<std::size_t>(points) * reps);

  for (int idx = 0; idx < points; ++idx) {
    rows[idx].point = spec.grid[idx];
    rows[idx].replicates_requested = reps;
    for (int r = 0; r < reps; ++r) {
      rows[idx].seeds.push_back(split_seed(spec.base.seed, idx + 1, r + 1));
    }
  }

  const long jobs = static_cast<long>(points) * reps;
#pragma omp parallel for schedule(dynamic)
  for (long job = 0; job < jobs; ++job) {
    const int idx = static_cast<int>(job / reps);
    const int r = static_cast<int>(job % reps);
    ReplicateOutcome& out = outcomes[job];

    NetworkSource source = spec.base.network;
    if (gamma_sweep) {
      source.gamma = spec.grid[idx].a;
    } else {
      source.p = spec.grid[idx].a;
    }
    try {
      const Network net = build_network(source, rows[idx].seeds[r]);
      const AttackStrategy atk{spec.base.attack.resolve(net.size())};
      const std::vector<double> c0 = spec.base.c0.resolve(net.size());
      out = solve_once(net, atk, spec.base.params, spec.base.bounds, c0,
                       spec.base.solver);
    } catch (const Error& e) {
      out.error = e.what();
    }
  }

  for (int idx = 0; idx < points; ++idx) {
    finish_row(rows[idx],
               {outcomes.begin() + static_cast<long>(idx) * reps,
                outcomes.begin() + static_cast<long>(idx + 1) * reps});
  }
  return rows;
}

double spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw InvalidParameterError(
        "rank correlation needs two equal-length samples of size >= 2");
  }
  const auto ranks = [](std::span<const double> v) {
    const int n = static_cast<int>(v.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return v[a] < v[b]; });
    std::vector<double> rank(n);
    int i = 0;
    while (i < n) {
      int j = i;
      while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
      const double avg = 0.5 * (i + j) + 1.0;  // average rank over the tie run
      for (int t = i; t <= j; ++t) rank[order[t]] = avg;
      i = j + 1;
    }
    return rank;
  };
  const std::vector<double> rx = ranks(xs);
  const std::vector<double> ry = ranks(ys);

  const int n = static_cast<int>(xs.size());
  double mean = 0.5 * (n + 1);
  double num = 0.0, dx = 0.0, dy = 0.0;
  for (int i = 0; i < n; ++i) {
    num += (rx[i] - mean) * (ry[i] - mean);
    dx += (rx[i] - mean) * (rx[i] - mean);
    dy += (ry[i] - mean) * (ry[i] - mean);
  }
  if (dx == 0.0 || dy == 0.0) return 0.0;
  return num / std::sqrt(dx * dy);
}

}  // namespace aptctl
