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

#include <vector>

#include "benchmark/benchmark.h"
#include "kepf/graph.h"
#include "kepf/oracles.h"
#include "kepf/sachs.h"

namespace kepf {
namespace {

std::vector<Graph> sample(int n) {
  std::vector<Graph> out;
  for (int i = 0; i < 32; ++i) out.push_back(random_graph(n, 0.5, 77 + i));
  return out;
}

void BM_DetSachs(benchmark::State& state) {
  const auto graphs = sample(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(det_sachs(graphs[i++ % graphs.size()]));
  }
}
BENCHMARK(BM_DetSachs)->DenseRange(4, 10, 2);

void BM_DetBareiss(benchmark::State& state) {
  std::vector<IntMatrix> ms;
  for (const Graph& g : sample(static_cast<int>(state.range(0)))) {
    ms.push_back(IntMatrix::adjacency(g));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(det_bareiss(ms[i++ % ms.size()]));
  }
}
BENCHMARK(BM_DetBareiss)->DenseRange(4, 10, 2)->Arg(20);

void BM_PermRyser(benchmark::State& state) {
  std::vector<IntMatrix> ms;
  for (const Graph& g : sample(static_cast<int>(state.range(0)))) {
    ms.push_back(IntMatrix::adjacency(g));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(perm_ryser(ms[i++ % ms.size()]));
  }
}
BENCHMARK(BM_PermRyser)->DenseRange(4, 10, 2)->Arg(16);

void BM_Prk(benchmark::State& state) {
  const auto graphs = sample(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prk(graphs[i++ % graphs.size()]));
  }
}
BENCHMARK(BM_Prk)->DenseRange(4, 10, 2);

}  // namespace
}  // namespace kepf
