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

#include <benchmark/benchmark.h>

#include "flowlab/diracdisk.hpp"
#include "flowlab/report.hpp"

namespace {

namespace dd = flowlab::diracdisk;

void BM_EdgeSolve(benchmark::State& state) {
  const dd::Channel ch(static_cast<int>(state.range(0)), 0.5, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(dd::edge_solve(ch, dd::Sector::minus));
}
BENCHMARK(BM_EdgeSolve)->Arg(1)->Arg(11)->Unit(benchmark::kMicrosecond);

void BM_RegularSolve(benchmark::State& state) {
  const dd::Channel ch(5, 0.5, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(dd::regular_solve(ch, dd::Sector::minus, 0.5 + 1e-6, 12.0));
}
BENCHMARK(BM_RegularSolve)->Unit(benchmark::kMillisecond);

void BM_SpectrumSweep(benchmark::State& state) {
  const auto grid = flowlab::report::range_grid(-1.0, 0.02, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dd::spectrum_sweep(static_cast<int>(state.range(0)), 1.0, grid, {-12.0, 12.0},
                                                dd::Sector::minus));
  }
}
BENCHMARK(BM_SpectrumSweep)->Arg(1)->Arg(11)->Unit(benchmark::kMillisecond);

}  // namespace
