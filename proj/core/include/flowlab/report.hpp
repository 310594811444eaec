// Copyright 2026 The flowlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLOWLAB_REPORT_HPP_
#define FLOWLAB_REPORT_HPP_

// Cross-model consistency report: spectral flow of the disk model per
// channel, local delta-Chern per band, sphere Chern change across t = 0, and
// the level transfer of the molecular model across N = 1/alpha.

#include <string>
#include <vector>

#include "flowlab/io.hpp"

namespace flowlab::report {

struct ReportConfig {
  double R = 1.0;
  double t_min = -1.0;
  double t_step = 0.02;
  double t_max = 1.0;
  std::vector<int> two_js{-11, -9, -7, -5, -3, -1, 1, 3, 5, 7, 9, 11};
  double e_min = -12.0;
  double e_max = 12.0;
  double semiquantum_t = 0.5;
  double winding_radius = 0.1;
  int winding_samples = 256;
  double sphere_J = 1.0;
  double sphere_t = 0.5;
  int grid_theta = 64;
  int grid_phi = 64;
  double alpha = 1.0 / 15.0;
  int n_first = 13;
  int n_last = 17;
};

struct ChannelFlow {
  int two_j = 1;
  int flow = 0;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ConsistencyReport {
  std::vector<ChannelFlow> flows;
  int delta_chern_upper_up = 0;
  int delta_chern_upper_down = 0;
  int delta_chern_lower_up = 0;
  int delta_chern_lower_down = 0;
  int sphere_chern_minus = 0;  // upper band at -sphere_t
  int sphere_chern_plus = 0;   // upper band at +sphere_t
  int sphere_chern_change = 0;
  int level_transfer = 0;
  std::vector<int> on_gap_n;
  std::vector<std::string> notes;
  std::vector<Check> checks;
  bool consistent = false;
};

// Runs every computation and evaluates the checks. Solver errors propagate.
ConsistencyReport build_report(const ReportConfig& config = {});

// Inclusive grid start, start + step, ... up to stop within half a step.
std::vector<double> range_grid(double start, double step, double stop);

// Key-value table (key, value) ending with the verdict.
io::Table report_table(const ConsistencyReport& report);

}  // namespace flowlab::report

#endif  // FLOWLAB_REPORT_HPP_
