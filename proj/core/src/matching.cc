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

#include "kepf/matching.h"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>

#include "kepf/error.h"
#include "kepf/internal/edmonds.h"

namespace kepf {

Matching::Matching(int n) : mate_(n) {
  for (int v = 0; v < n; ++v) mate_[v] = v;
}

Matching Matching::from_pairs(const Graph& g, std::span<const Edge> pairs) {
  if (!is_matching(g, pairs)) {
    throw MatchingError("edge set is not a matching of the graph");
  }
  Matching m(g.order());
  for (const Edge& e : pairs) {
    m.mate_[e.u] = e.v;
    m.mate_[e.v] = e.u;
  }
  m.rebuild_pairs();
  return m;
}

Matching Matching::from_pairs(const Graph& g,
                              std::initializer_list<Edge> pairs) {
  return from_pairs(g, std::span<const Edge>(pairs.begin(), pairs.size()));
}

Matching Matching::from_mates(const Graph& g, std::vector<int> mate) {
  if (static_cast<int>(mate.size()) != g.order()) {
    throw MatchingError("mate array length differs from the graph order");
  }
  for (int v = 0; v < g.order(); ++v) {
    int u = mate[v];
    if (u < 0 || u >= g.order() || mate[u] != v) {
      throw MatchingError("mate array is not an involution");
    }
    if (u != v && !g.adjacent(u, v)) {
      throw MatchingError("matched pair is not an edge of the graph");
    }
  }
  Matching m;
  m.mate_ = std::move(mate);
  m.rebuild_pairs();
  return m;
}

void Matching::rebuild_pairs() {
  pairs_.clear();
  for (int v = 0; v < order(); ++v) {
    if (mate_[v] > v) pairs_.push_back({v, mate_[v]});
  }
}

VertexSet Matching::saturated() const {
  VertexSet s;
  for (int v = 0; v < order(); ++v) {
    if (mate_[v] != v) s.insert(v);
  }
  return s;
}

bool is_matching(const Graph& g, std::span<const Edge> pairs) {
  VertexSet used;
  for (const Edge& e : pairs) {
    if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order()) {
      return false;
    }
    if (e.u == e.v || !g.adjacent(e.u, e.v)) return false;
    if (used.contains(e.u) || used.contains(e.v)) return false;
    used.insert(e.u);
    used.insert(e.v);
  }
  return true;
}

bool is_perfect(const Matching& m) {
  return 2 * m.size() == m.order();
}

namespace internal {

// Edmonds' cardinality algorithm restricted to `allowed`, seeded with
// `mate` (-1 for exposed). Returns the final mate array.
std::vector<int> edmonds(const Graph& g, VertexSet allowed,
                         std::vector<int> mate) {
  const int n = g.order();
  std::vector<int> parent(n), base(n);
  std::vector<char> used(n), in_blossom(n), on_path(n);
  std::deque<int> queue;

  auto lca = [&](int a, int b) {
    std::fill(on_path.begin(), on_path.end(), 0);
    for (;;) {
      a = base[a];
      on_path[a] = 1;
      if (mate[a] == -1) break;
      a = parent[mate[a]];
    }
    for (;;) {
      b = base[b];
      if (on_path[b]) return b;
      b = parent[mate[b]];
    }
  };

  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      in_blossom[base[v]] = in_blossom[base[mate[v]]] = 1;
      parent[v] = child;
      child = mate[v];
      v = parent[mate[v]];
    }
  };

  auto find_path = [&](int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    for (int i = 0; i < n; ++i) base[i] = i;
    used[root] = 1;
    queue.assign(1, root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int to : (g.neighbors(v) & allowed).members()) {
        if (base[v] == base[to] || mate[v] == to) continue;
        if (to == root || (mate[to] != -1 && parent[mate[to]] != -1)) {
          int cur = lca(v, to);
          std::fill(in_blossom.begin(), in_blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i) {
            if (allowed.contains(i) && in_blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (mate[to] == -1) return to;
          used[mate[to]] = 1;
          queue.push_back(mate[to]);
        }
      }
    }
    return -1;
  };

  for (int root : allowed.members()) {
    if (mate[root] != -1) continue;
    int v = find_path(root);
    while (v != -1) {
      int pv = parent[v];
      int next = mate[pv];
      mate[v] = pv;
      mate[pv] = v;
      v = next;
    }
  }
  return mate;
}

int matching_number(const Graph& g, VertexSet allowed) {
  auto mate = edmonds(g, allowed, std::vector<int>(g.order(), -1));
  int matched = 0;
  for (int v : allowed.members()) matched += mate[v] != -1;
  return matched / 2;
}

}  // namespace internal

Matching maximum_matching(const Graph& g) {
  const int n = g.order();
  auto raw = internal::edmonds(g, g.vertices(), std::vector<int>(n, -1));
  std::vector<int> mate(n);
  for (int v = 0; v < n; ++v) mate[v] = raw[v] == -1 ? v : raw[v];
  Matching m = Matching::from_mates(g, std::move(mate));

  // A greedy matching is maximal, hence at least half of maximum.
  VertexSet used;
  int greedy = 0;
  for (const Edge& e : g.edges()) {
    if (!used.contains(e.u) && !used.contains(e.v)) {
      used.insert(e.u);
      used.insert(e.v);
      ++greedy;
    }
  }
  if (m.size() < greedy) {
    throw std::logic_error("augmenting search returned fewer pairs than greedy");
  }
  return m;
}

std::vector<Matching> enumerate_maximum_matchings(const Graph& g,
                                                  std::size_t cap) {
  const int n = g.order();
  const int target = maximum_matching(g).size();
  const int exposed_allowed = n - 2 * target;

  std::vector<Matching> out;
  std::vector<int> mate(n);
  for (int v = 0; v < n; ++v) mate[v] = v;

  std::function<void(VertexSet, int, int)> rec = [&](VertexSet rest, int pairs,
                                                     int exposed) {
    const int need = target - pairs;
    if (2 * need > rest.size()) return;
    if (need > 0 && internal::matching_number(g, rest) < need) return;
    if (rest.empty()) {
      if (out.size() == cap) {
        throw CapExceeded("more than " + std::to_string(cap) +
                          " maximum matchings");
      }
      out.push_back(Matching::from_mates(g, mate));
      return;
    }
    const int v = rest.front();
    VertexSet without_v = rest;
    without_v.erase(v);
    for (int u : (g.neighbors(v) & without_v).members()) {
      mate[v] = u;
      mate[u] = v;
      VertexSet next = without_v;
      next.erase(u);
      rec(next, pairs + 1, exposed);
      mate[v] = v;
      mate[u] = u;
    }
    if (exposed < exposed_allowed) rec(without_v, pairs, exposed + 1);
  };
  rec(g.vertices(), 0, 0);

  std::sort(out.begin(), out.end(), [](const Matching& a, const Matching& b) {
    return a.pairs() < b.pairs();
  });
  return out;
}

std::vector<AltComponent> symmetric_difference_components(const Matching& m1,
                                                          const Matching& m2) {
  if (m1.order() != m2.order()) {
    throw MatchingError("matchings belong to graphs of different order");
  }
  const int n = m1.order();
  // Each vertex has at most one neighbor per matching in M1 xor M2; nbr[v]
  // holds them in ascending order, -1 when absent.
  std::vector<std::array<int, 2>> nbr(n, {-1, -1});
  std::vector<int> degree(n, 0);
  for (int v = 0; v < n; ++v) {
    const int a = m1.mate(v), b = m2.mate(v);
    if (a == b) continue;
    if (a != v) nbr[v][degree[v]++] = a;
    if (b != v) nbr[v][degree[v]++] = b;
    if (degree[v] == 2 && nbr[v][0] > nbr[v][1]) std::swap(nbr[v][0], nbr[v][1]);
  }
  auto origin = [&](int a, int b) {
    return m1.contains(a, b) ? Origin::kFirst : Origin::kSecond;
  };

  std::vector<char> seen(n, 0);
  std::vector<AltComponent> out;
  auto walk = [&](int start, AltKind kind) {
    AltComponent c;
    c.kind = kind;
    int prev = -1, cur = start;
    for (;;) {
      seen[cur] = 1;
      c.vertices.push_back(cur);
      int next = -1;
      for (int i = 0; i < degree[cur]; ++i) {
        const int w = nbr[cur][i];
        if (w != prev && !seen[w]) {
          next = w;
          break;
        }
      }
      if (next == -1) {
        if (kind == AltKind::kCycle) c.labels.push_back(origin(cur, start));
        break;
      }
      c.labels.push_back(origin(cur, next));
      prev = cur;
      cur = next;
    }
    out.push_back(std::move(c));
  };

  for (int v = 0; v < n; ++v) {
    if (!seen[v] && degree[v] == 1) walk(v, AltKind::kPath);
  }
  for (int v = 0; v < n; ++v) {
    if (!seen[v] && degree[v] == 2) walk(v, AltKind::kCycle);
  }
  return out;
}

bool satisfies_alternation_lemma(const AltComponent& c, const Matching& m1,
                                 const Matching& m2) {
  const std::size_t len = c.labels.size();
  if (len == 0 || len % 2 != 0) return false;
  const auto& vs = c.vertices;
  const std::size_t expected_vertices =
      c.kind == AltKind::kCycle ? len : len + 1;
  if (vs.size() != expected_vertices) return false;

  for (std::size_t i = 0; i < len; ++i) {
    int a = vs[i], b = vs[(i + 1) % vs.size()];
    bool in1 = m1.contains(a, b), in2 = m2.contains(a, b);
    if (in1 == in2) return false;
    if ((c.labels[i] == Origin::kFirst) != in1) return false;
    if (i + 1 < len && c.labels[i] == c.labels[i + 1]) return false;
  }
  if (c.kind == AltKind::kCycle) return c.labels.front() != c.labels.back();

  auto saturated_by_only = [](int v, const Matching& a, const Matching& b) {
    return !a.exposed(v) && b.exposed(v);
  };
  int head = vs.front(), tail = vs.back();
  return (saturated_by_only(head, m1, m2) && saturated_by_only(tail, m2, m1)) ||
         (saturated_by_only(head, m2, m1) && saturated_by_only(tail, m1, m2));
}

}  // namespace kepf
