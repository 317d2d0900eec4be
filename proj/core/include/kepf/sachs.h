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

#ifndef KEPF_SACHS_H_
#define KEPF_SACHS_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "kepf/bigint.h"
#include "kepf/graph.h"
#include "kepf/limits.h"

namespace kepf {

// A component of a Sachs subgraph: a single edge (two vertices) or a cycle
// (three or more vertices, listed from the smallest vertex towards its
// smaller cycle neighbor).
struct SachsComponent {
  std::vector<int> vertices;

  bool is_edge() const { return vertices.size() == 2; }
  bool is_cycle() const { return vertices.size() >= 3; }
  bool is_even() const { return vertices.size() % 2 == 0; }
  std::vector<Edge> edges() const;

  friend auto operator<=>(const SachsComponent&,
                          const SachsComponent&) = default;
};

// A subgraph spanning `support` whose components are single edges or cycles.
// Components are sorted by their smallest vertex.
struct SachsSubgraph {
  VertexSet support;
  std::vector<SachsComponent> components;

  std::vector<Edge> edges() const;
  bool has_odd_cycle() const;

  friend bool operator==(const SachsSubgraph&, const SachsSubgraph&) = default;
};

struct Census {
  int even_components = 0;  // K2 components plus even cycles
  int cycles = 0;

  friend bool operator==(const Census&, const Census&) = default;
};

Census component_census(const SachsSubgraph& h);

// Visits every Sachs subgraph of G[support] (vertex labels stay those of g).
// Returning true from the visitor stops the enumeration; the function then
// returns true.
bool for_each_sachs(const Graph& g, VertexSet support,
                    const std::function<bool(const SachsSubgraph&)>& visit);

// Every Sachs subgraph of g, sorted. The empty graph has exactly one, the
// empty subgraph; an isolated vertex leaves none.
std::vector<SachsSubgraph> enumerate_sachs(const Graph& g);

// Number of Sachs subgraphs of g, bucketed by census. Enumerates without
// materializing subgraphs.
struct SachsTally {
  // count[k][m]: subgraphs with k even components and m cycles.
  std::vector<std::vector<std::uint64_t>> count;

  std::uint64_t total() const;
  // Sum of (-1)^k 2^m.
  BigInt signed_sum() const;
  // Sum of 2^m.
  BigInt unsigned_sum() const;
};

SachsTally tally_sachs(const Graph& g);

// det and perm of the adjacency matrix through the Sachs expansion.
BigInt det_sachs(const Graph& g);
BigInt perm_sachs(const Graph& g);

// True iff G[support] has at least one Sachs subgraph.
bool has_sachs(const Graph& g, VertexSet support);

// Largest |S| such that G[S] admits a Sachs subgraph. Throws CapExceeded
// above `cap` vertices.
int prk(const Graph& g, int cap = Limits{}.subset_cap);

// Sachs subgraphs of every subgraph of order prk(g), sorted. Equal to
// enumerate_sachs(g) whenever that is non-empty.
std::vector<SachsSubgraph> enumerate_ssa(const Graph& g,
                                         int cap = Limits{}.subset_cap);

struct SpectralSummary {
  BigInt det;
  BigInt perm;
  std::uint64_t sachs_count = 0;
  int prk = 0;
};

SpectralSummary spectral_summary(const Graph& g, int cap = Limits{}.subset_cap);

}  // namespace kepf

#endif  // KEPF_SACHS_H_
