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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include "flowlab/diracdisk.hpp"
#include "flowlab/errors.hpp"
#include "flowlab/parallel.hpp"
#include "flowlab/report.hpp"

namespace {

using namespace flowlab::diracdisk;

std::vector<double> grid(double a, double step, double b) { return flowlab::report::range_grid(a, step, b); }

const SpectrumBranch* edge_branch(const SweepResult& r) {
  for (const SpectrumBranch& b : r.branches) {
    for (const BranchPoint& p : b.points) {
      if (p.state_class != StateClass::regular) return &b;
    }
  }
  return nullptr;
}

TEST(Sweep, EdgeBranchCrossesDownwardForPositiveJ) {
  const auto ts = grid(-1.0, 0.02, 1.0);
  const SweepResult r = spectrum_sweep(11, 1.0, ts, {-12.0, 12.0}, Sector::minus);
  const SpectrumBranch* b = edge_branch(r);
  ASSERT_NE(b, nullptr);
  ASSERT_EQ(b->points.size(), ts.size());
  for (const BranchPoint& p : b->points) {
    if (p.t < 0) EXPECT_GT(p.energy, 0.0);
    if (p.t > 0) EXPECT_LT(p.energy, 0.0);
    if (p.t == 0) {
      EXPECT_EQ(p.state_class, StateClass::zero_mode);
      EXPECT_EQ(p.energy, 0.0);
    } else {
      EXPECT_EQ(p.state_class, StateClass::edge);
    }
  }
  ASSERT_EQ(b->crossing_record.size(), 1u);
  EXPECT_EQ(b->crossing_record[0].direction, -1);
  EXPECT_EQ(b->crossing_record[0].t_star, 0.0);
  EXPECT_EQ(spectral_flow(r.branches), -1);
  EXPECT_TRUE(r.warnings.empty());
}

TEST(Sweep, MirrorChannel) {
  const auto ts = grid(-1.0, 0.02, 1.0);
  const SweepResult neg = spectrum_sweep(-11, 1.0, ts, {-12.0, 12.0}, Sector::minus);
  const SweepResult pos = spectrum_sweep(11, 1.0, ts, {-12.0, 12.0}, Sector::minus);
  EXPECT_EQ(spectral_flow(neg.branches), 1);
  std::vector<SpectrumBranch> all = neg.branches;
  all.insert(all.end(), pos.branches.begin(), pos.branches.end());
  EXPECT_EQ(spectral_flow(all), 0);
  const SpectrumBranch* a = edge_branch(neg);
  const SpectrumBranch* b = edge_branch(pos);
  ASSERT_TRUE(a && b);
  for (std::size_t k = 0; k < a->points.size(); ++k) EXPECT_NEAR(a->points[k].energy, -b->points[k].energy, 1e-12);
}

TEST(Sweep, GridStraddlingZero) {
  const auto ts = grid(-0.99, 0.02, 0.99);
  for (int tj : {-3, 1, 7}) {
    const SweepResult r = spectrum_sweep(tj, 1.0, ts, {-12.0, 12.0}, Sector::minus);
    EXPECT_EQ(spectral_flow(r.branches), tj > 0 ? -1 : 1);
    const SpectrumBranch* b = edge_branch(r);
    ASSERT_NE(b, nullptr);
    ASSERT_EQ(b->crossing_record.size(), 1u);
    EXPECT_NEAR(b->crossing_record[0].t_star, 0.0, 1e-3);
  }
}

TEST(Sweep, PositiveGridHasNoCrossings) {
  const SweepResult r = spectrum_sweep(5, 1.0, grid(0.1, 0.05, 1.0), {-12.0, 12.0}, Sector::minus);
  for (const SpectrumBranch& b : r.branches) EXPECT_TRUE(b.crossing_record.empty());
  EXPECT_EQ(spectral_flow(r.branches), 0);
}

TEST(Sweep, PlusSectorHasNoFlow) {
  const SweepResult r = spectrum_sweep(5, 1.0, grid(-1.0, 0.02, 1.0), {-12.0, 12.0}, Sector::plus);
  EXPECT_EQ(spectral_flow(r.branches), 0);
  for (const SpectrumBranch& b : r.branches) {
    for (const BranchPoint& p : b.points) EXPECT_EQ(p.state_class, StateClass::regular);
  }
}

TEST(Sweep, BranchesAreContinuous) {
  const SweepResult r = spectrum_sweep(3, 1.0, grid(-1.0, 0.02, 1.0), {-12.0, 12.0}, Sector::minus);
  for (const SpectrumBranch& b : r.branches) {
    EXPECT_EQ(b.two_j, 3);
    for (std::size_t k = 1; k < b.points.size(); ++k) {
      const double dt = b.points[k].t - b.points[k - 1].t;
      EXPECT_GT(dt, 0.0);
      EXPECT_LE(std::fabs(b.points[k].energy - b.points[k - 1].energy), 5.0 * dt);
    }
  }
}

TEST(Sweep, DeterministicAcrossThreadCounts) {
  const auto ts = grid(-1.0, 0.05, 1.0);
  setenv("FLOWLAB_THREADS", "1", 1);
  const SweepResult one = spectrum_sweep(-7, 1.0, ts, {-12.0, 12.0}, Sector::minus);
  setenv("FLOWLAB_THREADS", "3", 1);
  EXPECT_EQ(flowlab::worker_count(), 3u);
  const SweepResult three = spectrum_sweep(-7, 1.0, ts, {-12.0, 12.0}, Sector::minus);
  unsetenv("FLOWLAB_THREADS");
  ASSERT_EQ(one.branches.size(), three.branches.size());
  for (std::size_t b = 0; b < one.branches.size(); ++b) {
    ASSERT_EQ(one.branches[b].points.size(), three.branches[b].points.size());
    for (std::size_t k = 0; k < one.branches[b].points.size(); ++k) {
      EXPECT_EQ(one.branches[b].points[k].energy, three.branches[b].points[k].energy);
    }
  }
}

TEST(Sweep, InvalidInput) {
  const std::vector<double> unordered{0.0, -0.1, 0.2};
  EXPECT_THROW(spectrum_sweep(1, 1.0, unordered, {}, Sector::minus), flowlab::DomainError);
  EXPECT_THROW(spectrum_sweep(1, 1.0, std::vector<double>{}, {}, Sector::minus), flowlab::DomainError);
  EXPECT_THROW(spectrum_sweep(2, 1.0, grid(-1, 0.5, 1), {}, Sector::minus), flowlab::DomainError);
  EXPECT_THROW(spectrum_sweep(1, 1.0, grid(-1, 0.5, 1), {}, Sector::zero_plus), flowlab::DomainError);
}

TEST(SpectralFlow, SumsDirectionsAndRejectsTouches) {
  SpectrumBranch up, down, touch;
  up.crossing_record = {{0.1, 1}};
  down.crossing_record = {{0.0, -1}, {0.5, -1}};
  EXPECT_EQ(spectral_flow(std::vector<SpectrumBranch>{up, down}), -1);
  touch.touches = {0.0};
  EXPECT_THROW(spectral_flow(std::vector<SpectrumBranch>{up, touch}), flowlab::AmbiguousCrossingError);
}

TEST(Parallel, CoversRangeAndPropagatesErrors) {
  setenv("FLOWLAB_THREADS", "4", 1);
  std::vector<int> hits(1000, 0);
  flowlab::parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) EXPECT_EQ(h, 1);
  EXPECT_THROW(flowlab::parallel_for(100,
                                     [](std::size_t i) {
                                       if (i == 37) throw flowlab::DomainError("boom");
                                     }),
               flowlab::DomainError);
  setenv("FLOWLAB_THREADS", "zero", 1);
  EXPECT_GE(flowlab::worker_count(), 1u);
  unsetenv("FLOWLAB_THREADS");
}

}  // namespace
