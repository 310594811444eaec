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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "flowlab/diracdisk.hpp"
#include "flowlab/errors.hpp"
#include "flowlab/parallel.hpp"

namespace flowlab::diracdisk {
namespace {

constexpr double kInitialSlope = 1.0;
constexpr double kSlopeFactor = 5.0;
constexpr double kThresholdFloor = 1e-3;

struct Level {
  double energy;
  StateClass state_class;
};

std::vector<Level> levels_at(int two_j, double R, double t, EnergyWindow window, Sector sector,
                             std::vector<std::string>& warnings) {
  const Channel ch(two_j, t, R);
  std::vector<Level> out;
  if (t == 0.0) {
    if (auto z = zero_mode(ch, zero_limit(sector, two_j))) out.push_back({z->energy, StateClass::zero_mode});
  } else if (auto e = edge_solve(ch, sector)) {
    out.push_back({e->energy, StateClass::edge});
  }
  const double gap = std::fabs(t) + 1e-9 * std::max(1.0, std::fabs(t));
  const auto add_regular = [&](double lo, double hi) {
    if (!(lo < hi)) return;
    RegularSolveResult r = regular_solve(ch, sector, lo, hi);
    for (const EigenState& s : r.states) out.push_back({s.energy, StateClass::regular});
    for (std::string& w : r.warnings) warnings.push_back(std::move(w));
  };
  add_regular(window.min, std::min(window.max, -gap));
  add_regular(std::max(window.min, gap), window.max);
  std::sort(out.begin(), out.end(), [](const Level& a, const Level& b) { return a.energy < b.energy; });
  return out;
}

struct Track {
  SpectrumBranch branch;
  double slope = kInitialSlope;
  bool open = true;
};

double threshold(const Track& track, double dt) {
  return std::max(kSlopeFactor * std::fabs(track.slope) * dt, kThresholdFloor);
}

void record_crossings(SpectrumBranch& b) {
  const auto& p = b.points;
  const auto is_zero = [](double e) { return std::fabs(e) <= kZeroCrossingTolerance; };
  std::size_t k = 0;
  while (k < p.size()) {
    if (is_zero(p[k].energy)) {
      std::size_t end = k;
      while (end + 1 < p.size() && is_zero(p[end + 1].energy)) ++end;
      if (k > 0 && end + 1 < p.size()) {
        const double before = p[k - 1].energy;
        const double after = p[end + 1].energy;
        if ((before < 0.0) != (after < 0.0)) {
          b.crossing_record.push_back({p[k].t, after > 0.0 ? 1 : -1});
        } else {
          b.touches.push_back(p[k].t);
        }
      }
      k = end + 1;
      continue;
    }
    if (k + 1 < p.size() && !is_zero(p[k + 1].energy) && ((p[k].energy < 0.0) != (p[k + 1].energy < 0.0))) {
      const double e0 = p[k].energy;
      const double e1 = p[k + 1].energy;
      const double t_star = p[k].t + (p[k + 1].t - p[k].t) * e0 / (e0 - e1);
      b.crossing_record.push_back({t_star, e1 > e0 ? 1 : -1});
    }
    ++k;
  }
}

}  // namespace

SweepResult spectrum_sweep(int two_j, double R, std::span<const double> t_grid, EnergyWindow window,
                           Sector sector) {
  if (t_grid.empty()) throw DomainError("spectrum_sweep: empty t grid");
  for (std::size_t k = 1; k < t_grid.size(); ++k) {
    if (!(t_grid[k] > t_grid[k - 1])) throw DomainError("spectrum_sweep: t grid must be strictly increasing");
  }
  if (!(window.min < window.max)) throw DomainError("spectrum_sweep: empty energy window");
  if (sector != Sector::minus && sector != Sector::plus) {
    throw DomainError("spectrum_sweep: sector must be H- or H+");
  }
  static_cast<void>(Channel(two_j, 0.0, R));

  const std::size_t n = t_grid.size();
  std::vector<std::vector<Level>> levels(n);
  std::vector<std::vector<std::string>> local_warnings(n);
  parallel_for(n, [&](std::size_t k) {
    levels[k] = levels_at(two_j, R, t_grid[k], window, sector, local_warnings[k]);
  });

  SweepResult result;
  for (std::size_t k = 0; k < n; ++k) {
    for (const std::string& w : local_warnings[k]) {
      std::ostringstream msg;
      msg << "t=" << t_grid[k] << ": " << w;
      result.warnings.push_back(msg.str());
    }
  }

  std::vector<Track> tracks;
  const auto start_track = [&](double t, const Level& lv) {
    Track tr;
    tr.branch.two_j = two_j;
    tr.branch.sector = sector;
    tr.branch.points.push_back({t, lv.energy, lv.state_class});
    tracks.push_back(std::move(tr));
  };
  for (const Level& lv : levels[0]) start_track(t_grid[0], lv);

  for (std::size_t k = 1; k < n; ++k) {
    const double t = t_grid[k];
    const double dt = t - t_grid[k - 1];
    std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
    for (std::size_t b = 0; b < tracks.size(); ++b) {
      if (!tracks[b].open) continue;
      const double last = tracks[b].branch.points.back().energy;
      const double limit = threshold(tracks[b], dt);
      for (std::size_t i = 0; i < levels[k].size(); ++i) {
        const double gap = std::fabs(levels[k][i].energy - last);
        if (gap <= limit) pairs.emplace_back(gap, b, i);
      }
    }
    std::sort(pairs.begin(), pairs.end());
    std::vector<bool> track_used(tracks.size(), false);
    std::vector<bool> level_used(levels[k].size(), false);
    for (const auto& [gap, b, i] : pairs) {
      if (track_used[b] || level_used[i]) continue;
      track_used[b] = true;
      level_used[i] = true;
      Track& tr = tracks[b];
      tr.slope = (levels[k][i].energy - tr.branch.points.back().energy) / dt;
      tr.branch.points.push_back({t, levels[k][i].energy, levels[k][i].state_class});
    }
    const std::size_t existing = tracks.size();
    for (std::size_t b = 0; b < existing; ++b) {
      Track& tr = tracks[b];
      if (!tr.open || track_used[b]) continue;
      tr.open = false;
      const double last = tr.branch.points.back().energy;
      const double margin = threshold(tr, dt);
      if (last - window.min > margin && window.max - last > margin) {
        std::ostringstream msg;
        msg << "branch break: 2j=" << two_j << " branch at E=" << last << " has no continuation at t=" << t;
        result.warnings.push_back(msg.str());
      }
    }
    for (std::size_t i = 0; i < levels[k].size(); ++i) {
      if (!level_used[i]) start_track(t, levels[k][i]);
    }
  }

  result.branches.reserve(tracks.size());
  for (Track& tr : tracks) {
    record_crossings(tr.branch);
    result.branches.push_back(std::move(tr.branch));
  }
  return result;
}

int spectral_flow(std::span<const SpectrumBranch> branches) {
  int flow = 0;
  for (const SpectrumBranch& b : branches) {
    if (!b.touches.empty()) {
      std::ostringstream msg;
      msg << "spectral_flow: branch of 2j=" << b.two_j << " touches E = 0 at t=" << b.touches.front()
          << " without crossing";
      throw AmbiguousCrossingError(msg.str());
    }
    for (const Crossing& c : b.crossing_record) flow += c.direction;
  }
  return flow;
}

}  // namespace flowlab::diracdisk
