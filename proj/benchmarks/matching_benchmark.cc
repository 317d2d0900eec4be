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

#include <cstdint>
#include <vector>

#include "benchmark/benchmark.h"
#include "kepf/configurations.h"
#include "kepf/graph.h"
#include "kepf/matching.h"

namespace kepf {
namespace {

std::vector<Graph> sample(int n, double p, int count) {
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) out.push_back(random_graph(n, p, 1000 + i));
  return out;
}

void BM_MaximumMatching(benchmark::State& state) {
  const auto graphs = sample(static_cast<int>(state.range(0)), 0.3, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximum_matching(graphs[i++ % graphs.size()]));
  }
}
BENCHMARK(BM_MaximumMatching)->Arg(9)->Arg(16)->Arg(32)->Arg(64);

void BM_EnumerateMaximumMatchings(benchmark::State& state) {
  const auto graphs = sample(static_cast<int>(state.range(0)), 0.5, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        enumerate_maximum_matchings(graphs[i++ % graphs.size()]));
  }
}
BENCHMARK(BM_EnumerateMaximumMatchings)->DenseRange(6, 10, 2);

void BM_FlowerPosyCover(benchmark::State& state) {
  const auto graphs = sample(static_cast<int>(state.range(0)), 0.5, 64);
  std::vector<Matching> ms;
  for (const Graph& g : graphs) ms.push_back(maximum_matching(g));
  std::size_t i = 0;
  for (auto _ : state) {
    const std::size_t k = i++ % graphs.size();
    benchmark::DoNotOptimize(flower_posy_vertices(graphs[k], ms[k]));
  }
}
BENCHMARK(BM_FlowerPosyCover)->DenseRange(6, 10, 2);

}  // namespace
}  // namespace kepf
