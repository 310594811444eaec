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

#include "flowlab/specfun.hpp"

namespace {

using flowlab::specfun::BesselOrder;

void BM_BesselJ(benchmark::State& state) {
  const BesselOrder n(static_cast<int>(state.range(0)));
  const double x = static_cast<double>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(flowlab::specfun::bessel_j(n, x));
}
BENCHMARK(BM_BesselJ)->ArgsProduct({{0, 5, 20}, {1, 8, 30}});

void BM_BesselI(benchmark::State& state) {
  const BesselOrder n(static_cast<int>(state.range(0)));
  const double x = static_cast<double>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(flowlab::specfun::bessel_i(n, x));
}
BENCHMARK(BM_BesselI)->ArgsProduct({{0, 5, 20}, {1, 8, 30}});

void BM_BesselJPair(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(flowlab::specfun::bessel_j_pair(BesselOrder(5), 17.5));
}
BENCHMARK(BM_BesselJPair);

}  // namespace
