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

#include "aptctl/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "aptctl/csv.hpp"
#include "aptctl/errors.hpp"

namespace aptctl {

namespace {

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

bool parse_full_double(const std::string& s, double& out) {
  try {
    std::size_t used = 0;
    out = std::stod(s, &used);
    return used == s.size() && std::isfinite(out);
  } catch (const std::exception&) {
    return false;
  }
}

double want_double(const std::string& v, int line) {
  double d = 0.0;
  if (!parse_full_double(v, d)) {
    throw ParseError(line, "expected a number, got \"" + v + "\"");
  }
  return d;
}

long long want_int(const std::string& v, int line) {
  try {
    std::size_t used = 0;
    const long long i = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument("trailing content");
    return i;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got \"" + v + "\"");
  }
}

std::uint64_t want_u64(const std::string& v, int line) {
  try {
    std::size_t used = 0;
    const unsigned long long i = std::stoull(v, &used);
    if (used != v.size()) throw std::invalid_argument("trailing content");
    return i;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an unsigned integer, got \"" + v + "\"");
  }
}

std::vector<double> want_double_list(const std::string& v, int line) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string t = trim(item);
    if (t.empty()) throw ParseError(line, "empty entry in list \"" + v + "\"");
    double d = 0.0;
    if (!parse_full_double(t, d)) {
      throw ParseError(line, "expected a number, got \"" + t + "\"");
    }
    out.push_back(d);
  }
  if (out.empty()) throw ParseError(line, "empty list");
  return out;
}

std::string resolve_path(const std::string& path, const std::string& base_dir) {
  if (path.empty() || path.front() == '/' || base_dir.empty()) return path;
  return base_dir + "/" + path;
}

}  // namespace

RunConfig parse_config_text(std::string_view text, const std::string& base_dir) {
  RunConfig cfg;
  std::set<std::string> seen;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    const std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(line_no, "expected key = value, got \"" + line + "\"");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "missing key");
    if (value.empty()) throw ParseError(line_no, "missing value for " + key);
    if (!seen.insert(key).second) {
      throw ParseError(line_no, "duplicate key " + key);
    }

    auto& problem = cfg.problem;
    if (key == "network") {
      if (value == "scale-free") {
        problem.network.kind = NetworkSource::Kind::ScaleFree;
      } else if (value == "small-world") {
        problem.network.kind = NetworkSource::Kind::SmallWorld;
      } else {
        problem.network.kind = NetworkSource::Kind::EdgeListFile;
        problem.network.path = resolve_path(value, base_dir);
      }
    } else if (key == "n") {
      problem.network.n = static_cast<int>(want_int(value, line_no));
    } else if (key == "m") {
      problem.network.m = static_cast<int>(want_int(value, line_no));
    } else if (key == "gamma") {
      problem.network.gamma = want_double(value, line_no);
    } else if (key == "k") {
      problem.network.k = static_cast<int>(want_int(value, line_no));
    } else if (key == "p") {
      problem.network.p = want_double(value, line_no);
    } else if (key == "seed") {
      problem.seed = want_u64(value, line_no);
    } else if (key == "beta") {
      problem.params.beta = want_double(value, line_no);
    } else if (key == "horizon") {
      problem.params.horizon = want_double(value, line_no);
    } else if (key == "steps") {
      problem.params.steps = static_cast<int>(want_int(value, line_no));
    } else if (key == "x_lo") {
      problem.bounds.x_lo = want_double(value, line_no);
    } else if (key == "x_hi") {
      problem.bounds.x_hi = want_double(value, line_no);
    } else if (key == "y_lo") {
      problem.bounds.y_lo = want_double(value, line_no);
    } else if (key == "y_hi") {
      problem.bounds.y_hi = want_double(value, line_no);
    } else if (key == "attack") {
      double d = 0.0;
      if (parse_full_double(value, d)) {
        problem.attack = NodeValues{{d}, {}};
      } else {
        problem.attack = NodeValues{{}, resolve_path(value, base_dir)};
      }
    } else if (key == "c0") {
      double d = 0.0;
      if (parse_full_double(value, d)) {
        problem.c0 = NodeValues{{d}, {}};
      } else {
        problem.c0 = NodeValues{{}, resolve_path(value, base_dir)};
      }
    } else if (key == "relaxation") {
      problem.solver.relaxation = want_double(value, line_no);
    } else if (key == "tol") {
      problem.solver.tol = want_double(value, line_no);
    } else if (key == "max_iters") {
      problem.solver.max_iters = static_cast<int>(want_int(value, line_no));
    } else if (key == "scenario") {
      const auto s = parse_scenario(value);
      if (!s) throw ParseError(line_no, "unknown scenario \"" + value + "\"");
      cfg.scenario = *s;
    } else if (key == "points") {
      cfg.points = want_double_list(value, line_no);
    } else if (key == "vary") {
      if (value != "lo" && value != "hi" && value != "grid") {
        throw ParseError(line_no, "vary must be lo, hi, or grid");
      }
      cfg.vary = value;
    } else if (key == "replicates") {
      cfg.replicates = static_cast<int>(want_int(value, line_no));
      if (cfg.replicates < 1) {
        throw ParseError(line_no, "replicates must be >= 1");
      }
    } else if (key == "out_dir") {
      cfg.out_dir = resolve_path(value, base_dir);
    } else {
      throw ParseError(line_no, "unknown key \"" + key + "\"");
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::size_t slash = path.find_last_of("/\\");
  const std::string base_dir =
      slash == std::string::npos ? std::string(".") : path.substr(0, slash);
  return parse_config_text(buf.str(), base_dir);
}

std::string serialize_config(const RunConfig& cfg) {
  std::ostringstream out;
  const auto& problem = cfg.problem;
  const auto& net = problem.network;
  switch (net.kind) {
    case NetworkSource::Kind::ScaleFree: out << "network = scale-free\n"; break;
    case NetworkSource::Kind::SmallWorld: out << "network = small-world\n"; break;
    case NetworkSource::Kind::EdgeListFile:
      out << "network = " << net.path << "\n";
      break;
  }
  out << "n = " << net.n << "\n";
  out << "m = " << net.m << "\n";
  if (net.gamma) out << "gamma = " << format_number(*net.gamma) << "\n";
  out << "k = " << net.k << "\n";
  out << "p = " << format_number(net.p) << "\n";
  out << "seed = " << problem.seed << "\n";
  out << "beta = " << format_number(problem.params.beta) << "\n";
  out << "horizon = " << format_number(problem.params.horizon) << "\n";
  out << "steps = " << problem.params.steps << "\n";
  out << "x_lo = " << format_number(problem.bounds.x_lo) << "\n";
  out << "x_hi = " << format_number(problem.bounds.x_hi) << "\n";
  out << "y_lo = " << format_number(problem.bounds.y_lo) << "\n";
  out << "y_hi = " << format_number(problem.bounds.y_hi) << "\n";

  const auto node_values = [&](const char* key, const NodeValues& nv) {
    if (!nv.path.empty()) {
      out << key << " = " << nv.path << "\n";
    } else if (nv.values.size() == 1) {
      out << key << " = " << format_number(nv.values[0]) << "\n";
    } else {
      throw InvalidParameterError(
          std::string(key) +
          ": only scalar or file-backed per-node values serialize");
    }
  };
  node_values("attack", problem.attack);
  node_values("c0", problem.c0);

  out << "relaxation = " << format_number(problem.solver.relaxation) << "\n";
  out << "tol = " << format_number(problem.solver.tol) << "\n";
  out << "max_iters = " << problem.solver.max_iters << "\n";

  if (cfg.scenario) out << "scenario = " << to_string(*cfg.scenario) << "\n";
  if (!cfg.points.empty()) {
    out << "points = ";
    for (std::size_t i = 0; i < cfg.points.size(); ++i) {
      if (i) out << ",";
      out << format_number(cfg.points[i]);
    }
    out << "\n";
  }
  out << "vary = " << cfg.vary << "\n";
  out << "replicates = " << cfg.replicates << "\n";
  out << "out_dir = " << cfg.out_dir << "\n";
  return out.str();
}

SweepSpec make_sweep_spec(const RunConfig& cfg) {
  if (!cfg.scenario) {
    throw InvalidParameterError("sweep needs a scenario");
  }
  SweepSpec spec;
  spec.scenario = *cfg.scenario;
  spec.base = cfg.problem;
  spec.replicates = cfg.replicates;

  switch (spec.scenario) {
    case SweepScenario::BoundsX:
    case SweepScenario::BoundsY: {
      const bool is_x = spec.scenario == SweepScenario::BoundsX;
      const double base_lo =
          is_x ? cfg.problem.bounds.x_lo : cfg.problem.bounds.y_lo;
      const double base_hi =
          is_x ? cfg.problem.bounds.x_hi : cfg.problem.bounds.y_hi;
      if (cfg.vary == "lo") {
        const std::vector<double> pts =
            cfg.points.empty() ? std::vector<double>{0.1, 0.2, 0.3} : cfg.points;
        for (double v : pts) spec.grid.push_back({v, base_hi});
      } else if (cfg.vary == "hi") {
        const std::vector<double> pts =
            cfg.points.empty() ? std::vector<double>{0.5, 0.6, 0.7} : cfg.points;
        for (double v : pts) spec.grid.push_back({base_lo, v});
      } else {  // grid
        if (cfg.points.empty()) {
          spec.grid = default_bound_grid();
        } else {
          for (double lo : cfg.points) {
            for (double hi : cfg.points) spec.grid.push_back({lo, hi});
          }
        }
      }
      break;
    }
    case SweepScenario::ScaleFreeGamma: {
      const std::vector<double> pts =
          cfg.points.empty()
              ? std::vector<double>{2.8, 2.9, 3.0, 3.1, 3.2, 3.3, 3.4}
              : cfg.points;
      for (double v : pts) spec.grid.push_back({v, 0.0});
      break;
    }
    case SweepScenario::SmallWorldP: {
      const std::vector<double> pts =
          cfg.points.empty() ? std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5}
                             : cfg.points;
      for (double v : pts) spec.grid.push_back({v, 0.0});
      break;
    }
    case SweepScenario::BaselineCompare:
      break;  // no grid; the caller runs the comparison directly
  }
  return spec;
}

}  // namespace aptctl
