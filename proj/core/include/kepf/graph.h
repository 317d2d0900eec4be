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

#ifndef KEPF_GRAPH_H_
#define KEPF_GRAPH_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kepf {

// Hard upper bound imposed by the 64-bit adjacency rows.
inline constexpr int kMaxVertexCap = 64;
inline constexpr int kDefaultVertexCap = 32;
// graph6 is only supported with the single-byte order prefix.
inline constexpr int kGraph6MaxOrder = 62;
inline constexpr int kDefaultEnumerationCap = 7;

struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Subset of {0..63} with bitset semantics. Membership is relative to a host
// graph; the host is not stored.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> members);

  static constexpr VertexSet all(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  // Smallest member; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }

  void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  std::vector<int> members() const;

  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }
  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  // Graph with `n` vertices and the listed edges. Duplicate listings are
  // idempotent; self-loops, out-of-range endpoints and n above `vertex_cap`
  // raise GraphError.
  explicit Graph(int n, std::span<const Edge> edges = {},
                 int vertex_cap = kDefaultVertexCap);
  Graph(int n, std::initializer_list<Edge> edges,
        int vertex_cap = kDefaultVertexCap);

  int order() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  int degree(int v) const { return std::popcount(adj_[v]); }
  VertexSet vertices() const { return VertexSet::all(n_); }

  // Edges (u, v) with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void build(int n, std::span<const Edge> edges, int vertex_cap);

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<Edge> edges_;
};

// Parses the edge-list text format: first line is n, each further non-empty
// line is "u v". Errors carry the offending line number.
Graph parse_edge_list(std::string_view text,
                      int vertex_cap = kDefaultVertexCap);
std::string emit_edge_list(const Graph& g);

// graph6, orders 0..62 only.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  // original[i] is the host vertex that became vertex i.
  std::vector<int> original;
};

// G[S], relabeled 0..|S|-1 in ascending host order.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

// Vertices of `h` are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);

// Number of potential edges on n vertices, in graph6 pair order
// (0,1),(0,2),(1,2),(0,3),...
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

// The labeled graph whose i-th graph6-order pair is an edge iff bit i of
// `mask` is set.
Graph labeled_graph(int n, std::uint64_t mask);
std::uint64_t labeled_graph_count(int n);

// Every labeled graph on n vertices exactly once, in edge-mask order.
// Single-consumer.
class LabeledGraphStream {
 public:
  explicit LabeledGraphStream(int n, int cap = kDefaultEnumerationCap);

  std::optional<Graph> next();
  std::uint64_t size() const { return count_; }

 private:
  int n_;
  std::uint64_t count_;
  std::uint64_t mask_ = 0;
};

// Each potential edge is kept independently with probability p. The stream
// is mt19937_64 compared against 53-bit uniforms, so (n, p, seed) fixes the
// graph on every platform.
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace kepf

#endif  // KEPF_GRAPH_H_
