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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aptctl/config.hpp"
#include "aptctl/csv.hpp"
#include "aptctl/errors.hpp"
#include "aptctl/experiments.hpp"
#include "aptctl/fbsm.hpp"
#include "aptctl/generators.hpp"
#include "aptctl/metrics.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNotConverged = 2;

std::string join_path(const std::string& dir, const std::string& file) {
  if (dir.empty() || dir == ".") return file;
  return dir + "/" + file;
}

void ensure_dir(const std::string& dir) {
  if (dir.empty() || dir == ".") return;
  std::filesystem::create_directories(dir);
}

struct CommonOptions {
  std::string config_path;
  std::string out_dir_override;
};

aptctl::RunConfig load_with_overrides(const CommonOptions& opts) {
  aptctl::RunConfig cfg = aptctl::load_config(opts.config_path);
  if (!opts.out_dir_override.empty()) cfg.out_dir = opts.out_dir_override;
  return cfg;
}

std::vector<double> parse_points(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double d = std::stod(item, &used);
      if (item.find_first_not_of(" \t", used) != std::string::npos) {
        throw std::invalid_argument("trailing content");
      }
      out.push_back(d);
    } catch (const std::exception&) {
      throw aptctl::InvalidParameterError("bad point value \"" + item + "\"");
    }
  }
  if (out.empty()) {
    throw aptctl::InvalidParameterError("empty points list");
  }
  return out;
}

int cmd_generate(const std::string& model, int n, int m,
                 std::optional<double> gamma, int k, double p,
                 std::uint64_t seed, const std::string& out_path) {
  aptctl::Network net = [&] {
    if (model == "scale-free") {
      aptctl::NetworkSource src;
      src.kind = aptctl::NetworkSource::Kind::ScaleFree;
      src.n = n;
      src.m = m;
      src.gamma = gamma;
      return aptctl::build_network(src, seed);
    }
    if (model == "small-world") {
      return aptctl::generate_small_world(n, k, p, seed);
    }
    throw aptctl::InvalidParameterError(
        "unknown model \"" + model + "\" (use scale-free or small-world)");
  }();

  const std::string text = aptctl::to_edge_list(net);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw aptctl::IoError("cannot write " + out_path);
    out << text;
  }
  std::cerr << net.size() << " nodes, " << net.edge_count()
            << " directed edges (" << net.edge_count() / 2 << " undirected)\n";
  return kExitOk;
}

int cmd_solve(const CommonOptions& opts) {
  const aptctl::RunConfig cfg = load_with_overrides(opts);
  const aptctl::BuiltInstance inst = aptctl::build_instance(cfg.problem);
  const aptctl::SolveReport report =
      aptctl::solve(inst.net, inst.atk, inst.params, inst.bounds, inst.c0,
                    inst.solver);
  const aptctl::DiagnosticCurves dc = aptctl::curves(
      report.c_star, report.u_star, inst.net.loss_weights(), inst.params);

  ensure_dir(cfg.out_dir);
  aptctl::write_solution_csv(join_path(cfg.out_dir, "solution.csv"), report,
                             inst.params);
  aptctl::write_curves_csv(join_path(cfg.out_dir, "curves.csv"), inst.params,
                           dc);
  aptctl::write_summary_csv(join_path(cfg.out_dir, "summary.csv"), report);

  std::cerr << "network " << inst.network_label << ": j = "
            << aptctl::format_number(report.j_star) << " (loss "
            << aptctl::format_number(report.loss_star) << ", cost "
            << aptctl::format_number(report.cost_star) << "), "
            << report.iterations << " iterations, "
            << (report.converged ? "converged" : "NOT converged") << "\n";
  return report.converged ? kExitOk : kExitNotConverged;
}

int cmd_compare(const CommonOptions& opts) {
  const aptctl::RunConfig cfg = load_with_overrides(opts);
  const aptctl::BuiltInstance inst = aptctl::build_instance(cfg.problem);
  const aptctl::CompareResult result = aptctl::run_baseline_compare(inst);

  ensure_dir(cfg.out_dir);
  aptctl::write_compare_csv(join_path(cfg.out_dir, "compare.csv"), result);
  aptctl::write_compare_curves_csv(
      join_path(cfg.out_dir, "compare_curves.csv"), result);

  for (const auto& row : result.rows) {
    std::cerr << row.label << ": j = " << aptctl::format_number(row.j) << "\n";
  }
  return kExitOk;
}

int cmd_sweep(const CommonOptions& opts, const std::string& scenario_flag,
              const std::string& points_flag, const std::string& vary_flag,
              int replicates_flag) {
  aptctl::RunConfig cfg = load_with_overrides(opts);
  if (!scenario_flag.empty()) {
    const auto s = aptctl::parse_scenario(scenario_flag);
    if (!s) {
      throw aptctl::InvalidParameterError("unknown scenario \"" +
                                          scenario_flag + "\"");
    }
    cfg.scenario = *s;
  }
  if (!points_flag.empty()) {
    cfg.points = parse_points(points_flag);
  }
  if (!vary_flag.empty()) {
    if (vary_flag != "lo" && vary_flag != "hi" && vary_flag != "grid") {
      throw aptctl::InvalidParameterError("vary must be lo, hi, or grid");
    }
    cfg.vary = vary_flag;
  }
  if (replicates_flag > 0) cfg.replicates = replicates_flag;

  if (!cfg.scenario) {
    throw aptctl::InvalidParameterError(
        "sweep needs a scenario (flag --scenario or config key)");
  }

  ensure_dir(cfg.out_dir);

  if (*cfg.scenario == aptctl::SweepScenario::BaselineCompare) {
    const aptctl::BuiltInstance inst = aptctl::build_instance(cfg.problem);
    const aptctl::CompareResult result = aptctl::run_baseline_compare(inst);
    aptctl::write_compare_csv(join_path(cfg.out_dir, "compare.csv"), result);
    aptctl::write_compare_curves_csv(
        join_path(cfg.out_dir, "compare_curves.csv"), result);
    return kExitOk;
  }

  const aptctl::SweepSpec spec = aptctl::make_sweep_spec(cfg);
  const std::vector<aptctl::SweepRow> rows =
      (spec.scenario == aptctl::SweepScenario::BoundsX ||
       spec.scenario == aptctl::SweepScenario::BoundsY)
          ? aptctl::run_bound_sweep(spec)
          : aptctl::run_topology_sweep(spec);
  aptctl::write_sweep_csv(join_path(cfg.out_dir, "sweep.csv"), spec.scenario,
                          rows);
  std::cerr << rows.size() << " sweep rows written to "
            << join_path(cfg.out_dir, "sweep.csv") << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "aptctl: most-effective defense scheduling for networked systems under "
      "persistent attack"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write a synthetic network as an edge list");
  std::string model;
  int n = 100, m = 2, k = 4;
  double p = 0.2;
  std::optional<double> gamma;
  std::uint64_t seed = 1;
  std::string out_path;
  gen->add_option("--model", model, "scale-free or small-world")->required();
  gen->add_option("--n", n, "node count");
  gen->add_option("--m", m, "edges per new node (scale-free)");
  gen->add_option("--gamma", gamma,
                  "power-law exponent > 2 (tunable-exponent scale-free)");
  gen->add_option("--k", k, "even base degree (small-world)");
  gen->add_option("--p", p, "rewiring probability (small-world)");
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--out", out_path, "output file ('-' for stdout)");

  CommonOptions common;
  std::string scenario_flag, points_flag, vary_flag;
  int replicates_flag = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config_path, "problem config file")
        ->required();
    sub->add_option("--out-dir", common.out_dir_override,
                    "override the config's output directory");
  };

  auto* solve = app.add_subcommand(
      "solve", "solve one instance and write solution/curves/summary CSVs");
  add_common(solve);

  auto* compare = app.add_subcommand(
      "compare", "optimal strategy vs the three static baselines");
  add_common(compare);

  auto* sweep = app.add_subcommand("sweep", "re-solve across a parameter grid");
  add_common(sweep);
  sweep->add_option("--scenario", scenario_flag,
                    "bounds-x, bounds-y, scale-free-gamma, small-world-p, or "
                    "baseline-compare");
  sweep->add_option("--points", points_flag, "comma-separated sweep values");
  sweep->add_option("--vary", vary_flag, "bound sweeps: lo, hi, or grid");
  sweep->add_option("--replicates", replicates_flag,
                    "networks per point (topology sweeps)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (gen->parsed()) {
      return cmd_generate(model, n, m, gamma, k, p, seed, out_path);
    }
    if (solve->parsed()) return cmd_solve(common);
    if (compare->parsed()) return cmd_compare(common);
    if (sweep->parsed()) {
      return cmd_sweep(common, scenario_flag, points_flag, vary_flag,
                       replicates_flag);
    }
  } catch (const aptctl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
