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

#include "flowlab/fullquantum.hpp"

namespace {

void BM_Spectrum(benchmark::State& state) {
  const flowlab::fullquantum::ModelSpec spec{static_cast<int>(state.range(0)), 1.0 / 15.0};
  for (auto _ : state) benchmark::DoNotOptimize(flowlab::fullquantum::spectrum(spec));
}
BENCHMARK(BM_Spectrum)->Arg(8)->Arg(15)->Arg(40)->Unit(benchmark::kMicrosecond);

}  // namespace
