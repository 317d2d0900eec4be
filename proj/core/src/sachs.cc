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

#include "kepf/sachs.h"

#include <algorithm>
#include <string>

#include "kepf/error.h"

namespace kepf {

std::vector<Edge> SachsComponent::edges() const {
  std::vector<Edge> out;
  auto add = [&](int a, int b) { out.push_back({std::min(a, b), std::max(a, b)}); };
  if (is_edge()) {
    add(vertices[0], vertices[1]);
  } else {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      add(vertices[i], vertices[(i + 1) % vertices.size()]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> SachsSubgraph::edges() const {
  std::vector<Edge> out;
  for (const auto& c : components) {
    auto e = c.edges();
    out.insert(out.end(), e.begin(), e.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SachsSubgraph::has_odd_cycle() const {
  return std::any_of(components.begin(), components.end(),
                     [](const SachsComponent& c) {
                       return c.is_cycle() && !c.is_even();
                     });
}

Census component_census(const SachsSubgraph& h) {
  Census c;
  for (const auto& comp : h.components) {
    if (comp.is_even()) ++c.even_components;
    if (comp.is_cycle()) ++c.cycles;
  }
  return c;
}

namespace {

// Covers the lowest uncovered vertex v either with an edge to a higher
// uncovered neighbor or with a cycle whose minimum is v. A cycle is accepted
// only when its second vertex is below its last, so each is built once.
template <class Sink>
class SachsWalker {
 public:
  SachsWalker(const Graph& g, Sink& sink) : g_(g), sink_(sink) {}

  bool cover(VertexSet uncovered) {
    if (uncovered.empty()) return sink_.leaf();
    const int v = uncovered.front();
    VertexSet rest = uncovered;
    rest.erase(v);
    if ((g_.neighbors(v) & rest).empty()) return false;
    for (int u : (g_.neighbors(v) & rest).members()) {
      sink_.push_edge(v, u);
      VertexSet next = rest;
      next.erase(u);
      bool stop = cover(next);
      sink_.pop();
      if (stop) return true;
    }
    path_.assign(1, v);
    return grow_cycle(rest);
  }

 private:
  bool grow_cycle(VertexSet avail) {
    const int v = path_.front();
    const int x = path_.back();
    for (int y : (g_.neighbors(x) & avail).members()) {
      path_.push_back(y);
      VertexSet next = avail;
      next.erase(y);
      if (path_.size() >= 3 && path_[1] < y && g_.adjacent(y, v)) {
        sink_.push_cycle(path_);
        std::vector<int> saved = path_;
        bool stop = cover(next);
        path_ = std::move(saved);
        sink_.pop();
        if (stop) return true;
      }
      if (grow_cycle(next)) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  Sink& sink_;
  std::vector<int> path_;
};

struct TallySink {
  explicit TallySink(int n)
      : count(static_cast<std::size_t>(n / 2 + 1),
              std::vector<std::uint64_t>(static_cast<std::size_t>(n / 3 + 1))) {}

  void push_edge(int, int) {
    stack.push_back({1, 0});
    even += 1;
  }
  void push_cycle(const std::vector<int>& c) {
    int k = c.size() % 2 == 0 ? 1 : 0;
    stack.push_back({k, 1});
    even += k;
    cycles += 1;
  }
  void pop() {
    even -= stack.back().first;
    cycles -= stack.back().second;
    stack.pop_back();
  }
  bool leaf() {
    ++count[even][cycles];
    return false;
  }

  std::vector<std::vector<std::uint64_t>> count;
  std::vector<std::pair<int, int>> stack;
  int even = 0;
  int cycles = 0;
};

struct SubgraphSink {
  void push_edge(int a, int b) { current.components.push_back({{a, b}}); }
  void push_cycle(const std::vector<int>& c) {
    current.components.push_back({c});
  }
  void pop() { current.components.pop_back(); }
  bool leaf() {
    SachsSubgraph h = current;
    std::sort(h.components.begin(), h.components.end(),
              [](const SachsComponent& a, const SachsComponent& b) {
                return a.vertices.front() < b.vertices.front();
              });
    return visit(h);
  }

  SachsSubgraph current;
  std::function<bool(const SachsSubgraph&)> visit;
};

struct ExistsSink {
  void push_edge(int, int) {}
  void push_cycle(const std::vector<int>&) {}
  void pop() {}
  bool leaf() { return true; }
};

bool sachs_less(const SachsSubgraph& a, const SachsSubgraph& b) {
  if (a.support.bits() != b.support.bits()) {
    return a.support.bits() < b.support.bits();
  }
  return a.components < b.components;
}

// Calls fn(subset) for every size-k subset of {0..n-1} in increasing mask
// order, stopping early when fn returns true.
template <class Fn>
bool for_each_subset(int n, int k, Fn&& fn) {
  if (k == 0) return fn(VertexSet{});
  if (k > n) return false;
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = n == 64 ? 0 : std::uint64_t{1} << n;
  while (limit == 0 || s < limit) {
    if (fn(VertexSet(s))) return true;
    std::uint64_t c = s & -s;
    std::uint64_t r = s + c;
    if (r == 0) break;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return false;
}

bool no_isolated(const Graph& g, VertexSet s) {
  for (int v : s.members()) {
    if ((g.neighbors(v) & s).empty()) return false;
  }
  return true;
}

}  // namespace

bool for_each_sachs(const Graph& g, VertexSet support,
                    const std::function<bool(const SachsSubgraph&)>& visit) {
  SubgraphSink sink;
  sink.current.support = support;
  sink.visit = visit;
  return SachsWalker<SubgraphSink>(g, sink).cover(support);
}

std::vector<SachsSubgraph> enumerate_sachs(const Graph& g) {
  std::vector<SachsSubgraph> out;
  for_each_sachs(g, g.vertices(), [&](const SachsSubgraph& h) {
    out.push_back(h);
    return false;
  });
  std::sort(out.begin(), out.end(), sachs_less);
  return out;
}

std::uint64_t SachsTally::total() const {
  std::uint64_t t = 0;
  for (const auto& row : count) {
    for (auto c : row) t += c;
  }
  return t;
}

BigInt SachsTally::signed_sum() const {
  BigInt s = 0;
  for (std::size_t k = 0; k < count.size(); ++k) {
    for (std::size_t m = 0; m < count[k].size(); ++m) {
      if (count[k][m] == 0) continue;
      BigInt term = BigInt(count[k][m]) << m;
      if (k % 2 == 0) {
        s += term;
      } else {
        s -= term;
      }
    }
  }
  return s;
}

BigInt SachsTally::unsigned_sum() const {
  BigInt s = 0;
  for (const auto& row : count) {
    for (std::size_t m = 0; m < row.size(); ++m) {
      if (row[m] != 0) s += BigInt(row[m]) << m;
    }
  }
  return s;
}

SachsTally tally_sachs(const Graph& g) {
  TallySink sink(g.order());
  SachsWalker<TallySink>(g, sink).cover(g.vertices());
  return SachsTally{std::move(sink.count)};
}

BigInt det_sachs(const Graph& g) { return tally_sachs(g).signed_sum(); }

BigInt perm_sachs(const Graph& g) { return tally_sachs(g).unsigned_sum(); }

bool has_sachs(const Graph& g, VertexSet support) {
  if (!no_isolated(g, support)) return false;
  ExistsSink sink;
  return SachsWalker<ExistsSink>(g, sink).cover(support);
}

int prk(const Graph& g, int cap) {
  const int n = g.order();
  if (n > cap) {
    throw CapExceeded("prk subset scan capped at n = " + std::to_string(cap));
  }
  for (int s = n; s > 0; --s) {
    if (for_each_subset(n, s, [&](VertexSet sub) { return has_sachs(g, sub); })) {
      return s;
    }
  }
  return 0;
}

std::vector<SachsSubgraph> enumerate_ssa(const Graph& g, int cap) {
  const int order = prk(g, cap);
  std::vector<SachsSubgraph> out;
  for_each_subset(g.order(), order, [&](VertexSet sub) {
    if (no_isolated(g, sub)) {
      for_each_sachs(g, sub, [&](const SachsSubgraph& h) {
        out.push_back(h);
        return false;
      });
    }
    return false;
  });
  std::sort(out.begin(), out.end(), sachs_less);
  return out;
}

SpectralSummary spectral_summary(const Graph& g, int cap) {
  SachsTally t = tally_sachs(g);
  SpectralSummary s;
  s.det = t.signed_sum();
  s.perm = t.unsigned_sum();
  s.sachs_count = t.total();
  s.prk = prk(g, cap);
  return s;
}

}  // namespace kepf
