// Copyright 2026 The kepf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "benchmark/benchmark.h"
#include "kepf/graph.h"
#include "kepf/harness.h"

namespace kepf {
namespace {

void BM_VerifyGraph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_graph(random_graph(n, 0.5, seed++)));
  }
}
BENCHMARK(BM_VerifyGraph)->DenseRange(5, 9, 2)->Unit(benchmark::kMicrosecond);

void BM_ExhaustiveSweep(benchmark::State& state) {
  SweepSpec spec;
  spec.n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(spec));
}
BENCHMARK(BM_ExhaustiveSweep)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace kepf
