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

#include "kepf/configurations.h"

#include <algorithm>
#include <string>

#include "kepf/error.h"
#include "kepf/internal/configuration_search.h"

namespace kepf {

VertexSet Blossom::vertices() const {
  VertexSet s;
  for (int v : cycle) s.insert(v);
  return s;
}

namespace internal {

void require_maximum(const Graph& g, const Matching& m) {
  if (m.order() != g.order() || !is_matching(g, m.pairs())) {
    throw MatchingError("matching does not belong to the graph");
  }
  if (m.size() != maximum_matching(g).size()) {
    throw MatchingError("matching is not maximum");
  }
}

ConfigurationSearch::ConfigurationSearch(const Graph& g, const Matching& m,
                                         std::uint64_t budget)
    : g_(g), m_(m), budget_(budget), by_base_(g.order()) {
  std::vector<int> path;
  for (int b = 0; b < g.order(); ++b) {
    VertexSet visited{b};
    if (!m.exposed(b)) visited.insert(m.mate(b));
    path.assign(1, b);
    grow_cycles(path, visited);
  }
  std::sort(blossoms_.begin(), blossoms_.end());
  for (std::size_t i = 0; i < blossoms_.size(); ++i) {
    by_base_[blossoms_[i].base()].push_back(i);
    blossom_sets_.push_back(blossoms_[i].vertices());
  }
}

void ConfigurationSearch::tick() {
  if (++states_ > budget_) {
    throw BudgetExceeded("configuration search exceeded " +
                         std::to_string(budget_) + " states");
  }
}

// `path` runs b, c2, c3, ... and ends on an M edge whenever its size is odd.
// The step from the base and every other step after it leave along non-M
// edges, the rest along M edges, so closed cycles alternate by construction.
void ConfigurationSearch::grow_cycles(std::vector<int>& path,
                                      VertexSet visited) {
  tick();
  const int b = path.front();
  const int x = path.back();
  if (path.size() >= 3 && g_.adjacent(x, b) && path[1] < x) {
    blossoms_.push_back(Blossom{path});
  }
  for (int y : (g_.neighbors(x) - visited).members()) {
    if (m_.exposed(y)) continue;
    const int z = m_.mate(y);
    if (visited.contains(z)) continue;
    path.push_back(y);
    path.push_back(z);
    VertexSet next = visited;
    next.insert(y);
    next.insert(z);
    grow_cycles(path, next);
    path.pop_back();
    path.pop_back();
  }
}

bool ConfigurationSearch::walk(std::vector<int>& path, VertexSet visited,
                               const PrefixVisitor& on_prefix,
                               const RootVisitor& on_root) {
  tick();
  const int x = path.back();
  if (on_prefix && on_prefix(path, visited)) return true;
  for (int y : (g_.neighbors(x) - visited).members()) {
    if (m_.exposed(y)) {
      if (on_root && on_root(path, visited, y)) return true;
      continue;
    }
    const int z = m_.mate(y);
    if (visited.contains(z)) continue;
    path.push_back(y);
    path.push_back(z);
    VertexSet next = visited;
    next.insert(y);
    next.insert(z);
    bool stop = walk(path, next, on_prefix, on_root);
    path.pop_back();
    path.pop_back();
    if (stop) return true;
  }
  return false;
}

bool ConfigurationSearch::alternating_paths(std::size_t blossom,
                                            const PrefixVisitor& on_prefix,
                                            const RootVisitor& on_root) {
  const int b = blossoms_[blossom].base();
  if (m_.exposed(b)) return false;
  std::vector<int> path{b, m_.mate(b)};
  VertexSet visited = blossom_sets_[blossom];
  visited.insert(m_.mate(b));
  return walk(path, visited, on_prefix, on_root);
}

std::optional<Flower> ConfigurationSearch::first_flower() {
  for (std::size_t i = 0; i < blossoms_.size(); ++i) {
    if (m_.exposed(blossoms_[i].base())) {
      return Flower{blossoms_[i], {blossoms_[i].base()}};
    }
    std::optional<Flower> found;
    alternating_paths(i, nullptr, [&](const std::vector<int>& path, VertexSet,
                                      int root) {
      found = Flower{blossoms_[i], path};
      found->stem.push_back(root);
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<Posy> ConfigurationSearch::first_posy() {
  for (std::size_t i = 0; i < blossoms_.size(); ++i) {
    std::optional<Posy> found;
    alternating_paths(
        i,
        [&](const std::vector<int>& path, VertexSet on_path) {
          const VertexSet interior =
              on_path - blossom_sets_[i] - VertexSet{path.back()};
          for (std::size_t j : by_base_[path.back()]) {
            if ((interior & blossom_sets_[j]).empty()) {
              found = Posy{blossoms_[i], blossoms_[j], path};
              return true;
            }
          }
          return false;
        },
        nullptr);
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<PerfectFlower> ConfigurationSearch::first_perfect_flower() {
  for (std::size_t i = 0; i < blossoms_.size(); ++i) {
    const int b = blossoms_[i].base();
    if (!m_.exposed(b)) return PerfectFlower{blossoms_[i], {b, m_.mate(b)}};
  }
  return std::nullopt;
}

VertexSet ConfigurationSearch::perfect_flower_cover() {
  const VertexSet all = g_.vertices();
  VertexSet cover;
  for (std::size_t i = 0; i < blossoms_.size() && cover != all; ++i) {
    alternating_paths(
        i,
        [&](const std::vector<int>&, VertexSet on_path) {
          cover |= on_path;
          return cover == all;
        },
        nullptr);
  }
  return cover;
}

VertexSet ConfigurationSearch::flower_posy_cover() {
  const VertexSet all = g_.vertices();
  VertexSet cover;
  for (std::size_t i = 0; i < blossoms_.size() && cover != all; ++i) {
    const VertexSet cycle = blossom_sets_[i];
    if (m_.exposed(blossoms_[i].base())) {
      cover |= cycle;
      continue;
    }
    alternating_paths(
        i,
        [&](const std::vector<int>& path, VertexSet on_path) {
          const VertexSet interior = on_path - cycle - VertexSet{path.back()};
          for (std::size_t j : by_base_[path.back()]) {
            if ((interior & blossom_sets_[j]).empty()) {
              cover |= on_path | blossom_sets_[j];
            }
          }
          return cover == all;
        },
        [&](const std::vector<int>&, VertexSet on_path, int root) {
          cover |= on_path;
          cover.insert(root);
          return cover == all;
        });
  }
  return cover;
}

}  // namespace internal

std::vector<Blossom> find_blossoms(const Graph& g, const Matching& m,
                                   std::uint64_t budget) {
  internal::require_maximum(g, m);
  return internal::ConfigurationSearch(g, m, budget).blossoms();
}

std::optional<Flower> find_flower(const Graph& g, const Matching& m,
                                  std::uint64_t budget) {
  internal::require_maximum(g, m);
  return internal::ConfigurationSearch(g, m, budget).first_flower();
}

std::optional<Posy> find_posy(const Graph& g, const Matching& m,
                              std::uint64_t budget) {
  internal::require_maximum(g, m);
  return internal::ConfigurationSearch(g, m, budget).first_posy();
}

std::optional<PerfectFlower> find_perfect_flower(const Graph& g,
                                                 const Matching& m,
                                                 std::uint64_t budget) {
  internal::require_maximum(g, m);
  return internal::ConfigurationSearch(g, m, budget).first_perfect_flower();
}

VertexSet perfect_flower_vertices(const Graph& g, const Matching& m,
                                  std::uint64_t budget) {
  internal::require_maximum(g, m);
  return internal::ConfigurationSearch(g, m, budget).perfect_flower_cover();
}

VertexSet flower_posy_vertices(const Graph& g, const Matching& m,
                               std::uint64_t budget) {
  internal::require_maximum(g, m);
  return internal::ConfigurationSearch(g, m, budget).flower_posy_cover();
}

bool has_flower_or_posy(const Graph& g, const Matching& m,
                        std::uint64_t budget) {
  internal::require_maximum(g, m);
  internal::ConfigurationSearch search(g, m, budget);
  return search.first_flower().has_value() || search.first_posy().has_value();
}

namespace {

bool distinct(const std::vector<int>& vs) {
  VertexSet seen;
  for (int v : vs) {
    if (v < 0 || v >= 64 || seen.contains(v)) return false;
    seen.insert(v);
  }
  return true;
}

bool in_range(const Graph& g, const std::vector<int>& vs) {
  return std::all_of(vs.begin(), vs.end(),
                     [&](int v) { return v >= 0 && v < g.order(); });
}

VertexSet as_set(const std::vector<int>& vs) {
  VertexSet s;
  for (int v : vs) s.insert(v);
  return s;
}

// Path edges alternate between M and non-M and every step is a graph edge.
bool alternating_path(const Graph& g, const Matching& m,
                      const std::vector<int>& p) {
  if (!in_range(g, p) || !distinct(p)) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!g.adjacent(p[i], p[i + 1])) return false;
    if (i > 0 && m.contains(p[i - 1], p[i]) == m.contains(p[i], p[i + 1])) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool is_blossom(const Graph& g, const Matching& m, const Blossom& b) {
  const auto& c = b.cycle;
  if (c.size() < 3 || c.size() % 2 == 0) return false;
  if (!in_range(g, c) || !distinct(c) || m.order() != g.order()) return false;
  std::size_t in_m = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    int a = c[i], z = c[(i + 1) % c.size()];
    if (!g.adjacent(a, z)) return false;
    in_m += m.contains(a, z);
  }
  if (in_m != (c.size() - 1) / 2) return false;
  return !m.contains(c.front(), c[1]) && !m.contains(c.front(), c.back());
}

bool is_flower(const Graph& g, const Matching& m, const Flower& f) {
  if (!is_blossom(g, m, f.blossom)) return false;
  const auto& s = f.stem;
  if (s.empty() || s.front() != f.blossom.base() || s.size() % 2 == 0) {
    return false;
  }
  if (!alternating_path(g, m, s)) return false;
  if ((as_set(s) & f.blossom.vertices()) != VertexSet{s.front()}) return false;
  if (!m.exposed(s.back())) return false;
  return s.size() == 1 || m.contains(s[0], s[1]);
}

bool is_posy(const Graph& g, const Matching& m, const Posy& p) {
  if (!is_blossom(g, m, p.first) || !is_blossom(g, m, p.second)) return false;
  const auto& c = p.connector;
  if (c.size() < 2) return false;
  if (c.front() != p.first.base() || c.back() != p.second.base()) return false;
  if (!alternating_path(g, m, c)) return false;
  if (!m.contains(c[0], c[1]) || !m.contains(c[c.size() - 2], c.back())) {
    return false;
  }
  VertexSet interior = as_set(c);
  interior.erase(c.front());
  interior.erase(c.back());
  return (interior & (p.first.vertices() | p.second.vertices())).empty();
}

bool is_perfect_flower(const Graph& g, const Matching& m,
                       const PerfectFlower& pf) {
  if (!is_blossom(g, m, pf.blossom)) return false;
  const auto& p = pf.path;
  if (p.size() < 2 || !alternating_path(g, m, p)) return false;
  if (!m.contains(p[0], p[1]) || !m.contains(p[p.size() - 2], p.back())) {
    return false;
  }
  return (as_set(p) & pf.blossom.vertices()) == VertexSet{p.front()};
}

}  // namespace kepf
