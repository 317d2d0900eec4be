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

#ifndef KEPF_CONFIGURATIONS_H_
#define KEPF_CONFIGURATIONS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "kepf/graph.h"
#include "kepf/limits.h"
#include "kepf/matching.h"

namespace kepf {

// Configurations relative to a fixed maximum matching M.
//
// An M-blossom is an odd cycle c1..c(2k+1) holding exactly k edges of M; the
// base c1 is the cycle vertex left unsaturated by those edges. Witnesses are
// canonical: the cycle is listed base first, followed by the smaller of the
// base's two cycle neighbors. Paths are listed from their attachment vertex.

struct Blossom {
  std::vector<int> cycle;

  int base() const { return cycle.front(); }
  VertexSet vertices() const;
  friend auto operator<=>(const Blossom&, const Blossom&) = default;
};

// Blossom plus an even M-alternating stem from the base to an M-exposed root.
// A one-vertex stem means the base itself is exposed.
struct Flower {
  Blossom blossom;
  std::vector<int> stem;

  int root() const { return stem.back(); }
};

// Two blossoms whose bases are joined by an M-alternating connector that
// starts and ends with M edges and has no interior vertex in either blossom.
struct Posy {
  Blossom first;
  Blossom second;
  std::vector<int> connector;
};

// Blossom plus a non-trivial M-alternating path from the base whose first and
// last edges are in M and which meets the cycle only at the base.
struct PerfectFlower {
  Blossom blossom;
  std::vector<int> path;
};

// All M-blossoms, sorted. Throws MatchingError when `m` is not a maximum
// matching of `g` and BudgetExceeded when the search exceeds `budget`
// expanded states.
std::vector<Blossom> find_blossoms(const Graph& g, const Matching& m,
                                   std::uint64_t budget = Limits{}.search_budget);

std::optional<Flower> find_flower(const Graph& g, const Matching& m,
                                  std::uint64_t budget = Limits{}.search_budget);
std::optional<Posy> find_posy(const Graph& g, const Matching& m,
                              std::uint64_t budget = Limits{}.search_budget);
std::optional<PerfectFlower> find_perfect_flower(
    const Graph& g, const Matching& m,
    std::uint64_t budget = Limits{}.search_budget);

// Vertices covered by at least one M-perfect flower.
VertexSet perfect_flower_vertices(const Graph& g, const Matching& m,
                                  std::uint64_t budget = Limits{}.search_budget);

// Vertices covered by at least one M-flower or M-posy.
VertexSet flower_posy_vertices(const Graph& g, const Matching& m,
                               std::uint64_t budget = Limits{}.search_budget);

// True iff some M-flower or M-posy exists.
bool has_flower_or_posy(const Graph& g, const Matching& m,
                        std::uint64_t budget = Limits{}.search_budget);

// Structural re-validation of witnesses, independent of the search code.
bool is_blossom(const Graph& g, const Matching& m, const Blossom& b);
bool is_flower(const Graph& g, const Matching& m, const Flower& f);
bool is_posy(const Graph& g, const Matching& m, const Posy& p);
bool is_perfect_flower(const Graph& g, const Matching& m,
                       const PerfectFlower& pf);

}  // namespace kepf

#endif  // KEPF_CONFIGURATIONS_H_
