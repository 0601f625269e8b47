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

#ifndef APTCTL_CSV_HPP
#define APTCTL_CSV_HPP

#include <string>

#include "aptctl/experiments.hpp"
#include "aptctl/fbsm.hpp"
#include "aptctl/metrics.hpp"

namespace aptctl {

/// 12-significant-digit decimal rendering ("%.12g"). Every CSV cell goes
/// through this so reruns are byte-identical.
std::string format_number(double v);

/// solution.csv: t, c_0..c_{N-1}, x_0.., y_0.., lambda_0..
void write_solution_csv(const std::string& path, const SolveReport& report,
                        const ModelParams& params);

/// curves.csv: t, ce, sc
void write_curves_csv(const std::string& path, const ModelParams& params,
                      const DiagnosticCurves& curves);

/// summary.csv: j, loss, cost, iterations, converged
void write_summary_csv(const std::string& path, const SolveReport& report);

/// compare.csv: strategy, x_level, y_level, j, loss, cost, converged
void write_compare_csv(const std::string& path, const CompareResult& result);

/// compare_curves.csv: t, then ce_<label>, sc_<label> per strategy
void write_compare_curves_csv(const std::string& path,
                              const CompareResult& result);

/// sweep.csv: scenario-specific point columns, then ol, oc, oj,
/// converged_fraction, replicates, seeds, status
void write_sweep_csv(const std::string& path, SweepScenario scenario,
                     const std::vector<SweepRow>& rows);

}  // namespace aptctl

#endif  // APTCTL_CSV_HPP
