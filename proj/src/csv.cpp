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

#include "aptctl/csv.hpp"

#include <cstdio>
#include <fstream>

#include "aptctl/errors.hpp"

namespace aptctl {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  return out;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_solution_csv(const std::string& path, const SolveReport& report,
                        const ModelParams& params) {
  std::ofstream out = open_out(path);
  const int n = report.c_star.values.cols();
  const int rows = report.c_star.values.rows();

  out << "t";
  for (int i = 0; i < n; ++i) out << ",c_" << i;
  for (int i = 0; i < n; ++i) out << ",x_" << i;
  for (int i = 0; i < n; ++i) out << ",y_" << i;
  for (int i = 0; i < n; ++i) out << ",lambda_" << i;
  out << "\n";

  for (int k = 0; k < rows; ++k) {
    out << format_number(k * params.dt());
    const auto c = report.c_star.values.row(k);
    const auto x = report.u_star.x.row(k);
    const auto y = report.u_star.y.row(k);
    const auto l = report.lambda_star.values.row(k);
    for (int i = 0; i < n; ++i) out << ',' << format_number(c[i]);
    for (int i = 0; i < n; ++i) out << ',' << format_number(x[i]);
    for (int i = 0; i < n; ++i) out << ',' << format_number(y[i]);
    for (int i = 0; i < n; ++i) out << ',' << format_number(l[i]);
    out << "\n";
  }
}

void write_curves_csv(const std::string& path, const ModelParams& params,
                      const DiagnosticCurves& curves) {
  std::ofstream out = open_out(path);
  out << "t,ce,sc\n";
  for (std::size_t k = 0; k < curves.ce.size(); ++k) {
    out << format_number(k * params.dt()) << ',' << format_number(curves.ce[k])
        << ',' << format_number(curves.sc[k]) << "\n";
  }
}

void write_summary_csv(const std::string& path, const SolveReport& report) {
  std::ofstream out = open_out(path);
  out << "j,loss,cost,iterations,converged\n";
  out << format_number(report.j_star) << ',' << format_number(report.loss_star)
      << ',' << format_number(report.cost_star) << ',' << report.iterations
      << ',' << bool_str(report.converged) << "\n";
}

void write_compare_csv(const std::string& path, const CompareResult& result) {
  std::ofstream out = open_out(path);
  out << "strategy,x_level,y_level,j,loss,cost,converged\n";
  for (const auto& row : result.rows) {
    out << row.label << ',';
    if (row.is_static) {
      out << format_number(row.x_level) << ',' << format_number(row.y_level);
    } else {
      out << ',';
    }
    out << ',' << format_number(row.j) << ',' << format_number(row.loss) << ','
        << format_number(row.cost) << ',' << bool_str(row.converged) << "\n";
  }
}

void write_compare_curves_csv(const std::string& path,
                              const CompareResult& result) {
  std::ofstream out = open_out(path);
  out << "t";
  for (const auto& row : result.rows) {
    out << ",ce_" << row.label << ",sc_" << row.label;
  }
  out << "\n";
  for (std::size_t k = 0; k < result.times.size(); ++k) {
    out << format_number(result.times[k]);
    for (const auto& row : result.rows) {
      out << ',' << format_number(row.ce[k]) << ',' << format_number(row.sc[k]);
    }
    out << "\n";
  }
}

void write_sweep_csv(const std::string& path, SweepScenario scenario,
                     const std::vector<SweepRow>& rows) {
  std::ofstream out = open_out(path);
  const bool two_coords = scenario == SweepScenario::BoundsX ||
                          scenario == SweepScenario::BoundsY;
  switch (scenario) {
    case SweepScenario::BoundsX: out << "x_lo,x_hi"; break;
    case SweepScenario::BoundsY: out << "y_lo,y_hi"; break;
    case SweepScenario::ScaleFreeGamma: out << "gamma"; break;
    case SweepScenario::SmallWorldP: out << "p"; break;
    case SweepScenario::BaselineCompare:
      throw InvalidParameterError("baseline-compare emits compare.csv");
  }
  out << ",ol,oc,oj,converged_fraction,replicates,seeds,status\n";

  for (const auto& row : rows) {
    out << format_number(row.point.a);
    if (two_coords) out << ',' << format_number(row.point.b);
    if (row.skipped) {
      out << ",,,,";
    } else {
      out << ',' << format_number(row.ol) << ',' << format_number(row.oc) << ','
          << format_number(row.oj) << ','
          << format_number(row.converged_fraction);
    }
    out << ',' << row.replicates_effective << '/' << row.replicates_requested
        << ',';
    for (std::size_t s = 0; s < row.seeds.size(); ++s) {
      if (s) out << ';';
      out << row.seeds[s];
    }
    std::string status = row.skipped ? "skipped: " + row.reason : "ok";
    for (char& ch : status) {
      if (ch == ',' || ch == '\n') ch = ';';
    }
    out << ',' << status << "\n";
  }
}

}  // namespace aptctl
