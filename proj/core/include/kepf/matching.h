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

#ifndef KEPF_MATCHING_H_
#define KEPF_MATCHING_H_

#include <cstddef>
#include <span>
#include <vector>

#include "kepf/graph.h"
#include "kepf/limits.h"

namespace kepf {

// A set of pairwise vertex-disjoint edges together with its involution
// mate(v). The host graph is not stored; operations that need it take it
// explicitly and verify that every pair is one of its edges.
class Matching {
 public:
  Matching() = default;
  // Empty matching on n vertices.
  explicit Matching(int n);

  // Throws MatchingError unless `pairs` is a matching of `g`.
  static Matching from_pairs(const Graph& g, std::span<const Edge> pairs);
  static Matching from_pairs(const Graph& g, std::initializer_list<Edge> pairs);
  // `mate` is the involution itself (mate[v] == v for exposed v).
  static Matching from_mates(const Graph& g, std::vector<int> mate);

  int order() const { return static_cast<int>(mate_.size()); }
  int size() const { return static_cast<int>(pairs_.size()); }

  // The matched partner of v, or v itself when v is exposed.
  int mate(int v) const { return mate_[v]; }
  bool exposed(int v) const { return mate_[v] == v; }
  bool contains(int u, int v) const { return u != v && mate_[u] == v; }
  VertexSet saturated() const;

  // Pairs (u, v) with u < v, sorted.
  const std::vector<Edge>& pairs() const { return pairs_; }

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.mate_ == b.mate_;
  }

 private:
  void rebuild_pairs();

  std::vector<int> mate_;
  std::vector<Edge> pairs_;
};

bool is_matching(const Graph& g, std::span<const Edge> pairs);

// True iff no vertex is exposed; vacuously true on zero vertices.
bool is_perfect(const Matching& m);

// Maximum-cardinality matching by augmenting-path search with blossom
// contraction. Roots are tried in ascending order and neighbors scanned
// ascending, so the result is a pure function of `g`.
Matching maximum_matching(const Graph& g);

// Every maximum matching exactly once, sorted by their sorted pair lists.
// Throws CapExceeded when there are more than `cap`.
std::vector<Matching> enumerate_maximum_matchings(
    const Graph& g, std::size_t cap = Limits{}.max_matchings);

enum class AltKind { kCycle, kPath };
enum class Origin { kFirst, kSecond };

// One connected component of (V(M1 △ M2), M1 △ M2).
struct AltComponent {
  AltKind kind = AltKind::kPath;
  // Cycles start at their smallest vertex and head towards the smaller of its
  // two neighbors; paths start at the smaller endpoint.
  std::vector<int> vertices;
  // labels[i] tags the edge vertices[i] -- vertices[i+1] (cyclically for a
  // cycle) with the matching it came from.
  std::vector<Origin> labels;

  std::size_t length() const { return labels.size(); }
};

// Throws MatchingError when the matchings live on different vertex counts.
std::vector<AltComponent> symmetric_difference_components(const Matching& m1,
                                                          const Matching& m2);

// Checks the structure of a component of the symmetric difference of two
// maximum matchings: an even alternating cycle, or an even alternating path
// whose ends are saturated by exactly one matching each, one per matching.
bool satisfies_alternation_lemma(const AltComponent& c, const Matching& m1,
                                 const Matching& m2);

}  // namespace kepf

#endif  // KEPF_MATCHING_H_
