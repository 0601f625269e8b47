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

#ifndef APTCTL_CONFIG_HPP
#define APTCTL_CONFIG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aptctl/experiments.hpp"

namespace aptctl {

/// Everything a CLI run needs, parsed from a flat `key = value` text file.
/// Unknown keys are rejected. See the README for the key reference.
struct RunConfig {
  ProblemSpec problem;

  // sweep settings
  std::optional<SweepScenario> scenario;
  std::vector<double> points;  // swept values; scenario-dependent meaning
  std::string vary = "grid";   // bound sweeps: "lo", "hi", or "grid"
  int replicates = 5;

  std::string out_dir = ".";
};

/// Parses config text. Relative paths inside the config resolve against
/// base_dir. Errors carry the offending line number.
RunConfig parse_config_text(std::string_view text, const std::string& base_dir);

RunConfig load_config(const std::string& path);

/// Renders a config back to the key = value format. parse(serialize(c))
/// reproduces c field for field.
std::string serialize_config(const RunConfig& cfg);

/// Expands config + overrides into the sweep grid for its scenario
/// (bound pairs from `vary`/`points`, scalar points for topology sweeps,
/// documented defaults when points are empty).
SweepSpec make_sweep_spec(const RunConfig& cfg);

}  // namespace aptctl

#endif  // APTCTL_CONFIG_HPP
