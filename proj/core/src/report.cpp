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

#include "flowlab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

#include "flowlab/diracdisk.hpp"
#include "flowlab/errors.hpp"
#include "flowlab/fullquantum.hpp"
#include "flowlab/semiquantum.hpp"

namespace flowlab::report {

std::vector<double> range_grid(double start, double step, double stop) {
  if (!std::isfinite(start) || !std::isfinite(step) || !std::isfinite(stop)) {
    throw DomainError("range: values must be finite");
  }
  if (!(step > 0.0)) throw DomainError("range: step must be positive");
  if (!(stop > start)) throw DomainError("range: stop must exceed start");
  const double count = std::floor((stop - start) / step + 0.5);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count) + 1);
  for (long k = 0; k <= static_cast<long>(count); ++k) {
    double v = start + static_cast<double>(k) * step;
    if (std::fabs(v) < 1e-9 * step) v = 0.0;
    out.push_back(v);
  }
  return out;
}

ConsistencyReport build_report(const ReportConfig& c) {
  using namespace diracdisk;
  namespace sq = semiquantum;
  ConsistencyReport r;

  const std::vector<double> grid = range_grid(c.t_min, c.t_step, c.t_max);
  for (int two_j : c.two_js) {
    const SweepResult sweep = spectrum_sweep(two_j, c.R, grid, {c.e_min, c.e_max}, Sector::minus);
    r.flows.push_back({two_j, spectral_flow(sweep.branches)});
  }

  const sq::DVectorField local = sq::DVectorField::local_model();
  sq::DeltaChernOptions opt;
  opt.radius = c.winding_radius;
  opt.samples = c.winding_samples;
  const double ts = c.semiquantum_t;
  r.delta_chern_upper_up = sq::delta_chern(local, sq::Band::upper, sq::Gauge::up, -ts, ts, opt);
  r.delta_chern_upper_down = sq::delta_chern(local, sq::Band::upper, sq::Gauge::down, -ts, ts, opt);
  r.delta_chern_lower_up = sq::delta_chern(local, sq::Band::lower, sq::Gauge::up, -ts, ts, opt);
  r.delta_chern_lower_down = sq::delta_chern(local, sq::Band::lower, sq::Gauge::down, -ts, ts, opt);

  const sq::DVectorField sphere = sq::DVectorField::sphere_model(c.sphere_J);
  const sq::SphereGrid sg{c.grid_theta, c.grid_phi};
  r.sphere_chern_minus = sq::chern_sphere(sphere, -c.sphere_t, sq::Band::upper, sg).chern;
  r.sphere_chern_plus = sq::chern_sphere(sphere, c.sphere_t, sq::Band::upper, sg).chern;
  r.sphere_chern_change = r.sphere_chern_plus - r.sphere_chern_minus;

  const fullquantum::TransferResult transfer = fullquantum::level_transfer(c.alpha, c.n_first, c.n_last);
  r.level_transfer = transfer.transfer;
  r.on_gap_n = transfer.on_gap_n;

  std::map<int, int> flow_of;
  for (const ChannelFlow& f : r.flows) flow_of[f.two_j] = f.flow;

  const auto add = [&](std::string name, bool ok, std::string detail) {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  for (const ChannelFlow& f : r.flows) {
    add("flow_magnitude_2j=" + std::to_string(f.two_j), std::abs(f.flow) == 1, "flow=" + std::to_string(f.flow));
  }
  for (const ChannelFlow& f : r.flows) {
    if (f.two_j < 0) continue;
    const auto it = flow_of.find(-f.two_j);
    const bool ok = it != flow_of.end() && it->second == -f.flow;
    add("flow_pair_2j=" + std::to_string(f.two_j), ok,
        it == flow_of.end() ? "missing channel " + std::to_string(-f.two_j)
                            : "sum=" + std::to_string(f.flow + it->second));
  }
  add("delta_chern_upper", r.delta_chern_upper_up == -1 && r.delta_chern_upper_down == -1,
      "up=" + std::to_string(r.delta_chern_upper_up) + " down=" + std::to_string(r.delta_chern_upper_down));
  add("delta_chern_lower", r.delta_chern_lower_up == 1 && r.delta_chern_lower_down == 1,
      "up=" + std::to_string(r.delta_chern_lower_up) + " down=" + std::to_string(r.delta_chern_lower_down));
  add("sphere_chern_change", std::abs(r.sphere_chern_change) == 1,
      "change=" + std::to_string(r.sphere_chern_change));
  add("level_transfer", std::abs(r.level_transfer) == 1, "transfer=" + std::to_string(r.level_transfer));

  r.notes.push_back(r.sphere_chern_change == r.delta_chern_upper_up
                        ? "sphere Chern change of the upper band has the sign of the local delta-Chern of E+"
                        : "sphere Chern change of the upper band has the opposite sign to the local delta-Chern "
                          "of E+");
  r.consistent = std::all_of(r.checks.begin(), r.checks.end(), [](const Check& k) { return k.passed; });
  return r;
}

io::Table report_table(const ConsistencyReport& r) {
  io::Table t;
  t.header = {"key", "value"};
  for (const ChannelFlow& f : r.flows) {
    t.add_row({"flow_2j=" + std::to_string(f.two_j), static_cast<std::int64_t>(f.flow)});
  }
  t.add_row({"delta_chern_upper_up", static_cast<std::int64_t>(r.delta_chern_upper_up)});
  t.add_row({"delta_chern_upper_down", static_cast<std::int64_t>(r.delta_chern_upper_down)});
  t.add_row({"delta_chern_lower_up", static_cast<std::int64_t>(r.delta_chern_lower_up)});
  t.add_row({"delta_chern_lower_down", static_cast<std::int64_t>(r.delta_chern_lower_down)});
  t.add_row({"sphere_chern_minus", static_cast<std::int64_t>(r.sphere_chern_minus)});
  t.add_row({"sphere_chern_plus", static_cast<std::int64_t>(r.sphere_chern_plus)});
  t.add_row({"sphere_chern_change", static_cast<std::int64_t>(r.sphere_chern_change)});
  t.add_row({"level_transfer", static_cast<std::int64_t>(r.level_transfer)});
  for (int n : r.on_gap_n) t.add_row({"on_gap_N", static_cast<std::int64_t>(n)});
  for (const Check& k : r.checks) {
    t.add_row({"check:" + k.name, std::string(k.passed ? "pass " : "fail ") + k.detail});
  }
  for (const std::string& n : r.notes) t.add_row({"note", n});
  t.add_row({"verdict", std::string(r.consistent ? "consistent" : "inconsistent")});
  return t;
}

}  // namespace flowlab::report
