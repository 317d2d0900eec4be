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

#include "kepf/oracles.h"

#include <algorithm>
#include <string>
#include <utility>

#include "kepf/error.h"

namespace kepf {

IntMatrix IntMatrix::adjacency(const Graph& g) {
  IntMatrix m(g.order());
  for (const Edge& e : g.edges()) {
    m(e.u, e.v) = 1;
    m(e.v, e.u) = 1;
  }
  return m;
}

BigInt det_bareiss(IntMatrix m) {
  const int n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      int r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

BigInt perm_ryser(const IntMatrix& m, int cap) {
  const int n = m.size();
  if (n > cap) {
    throw CapExceeded("Ryser permanent capped at " + std::to_string(cap) +
                      " rows");
  }
  if (n == 0) return 1;
  std::vector<BigInt> row_sum(n, 0);
  BigInt total = 0;
  std::uint64_t gray = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int col = std::countr_zero(k);
    gray ^= std::uint64_t{1} << col;
    const bool added = (gray >> col) & 1U;
    for (int i = 0; i < n; ++i) {
      if (added) {
        row_sum[i] += m(i, col);
      } else {
        row_sum[i] -= m(i, col);
      }
    }
    BigInt prod = 1;
    for (int i = 0; i < n && prod != 0; ++i) prod *= row_sum[i];
    if ((n - std::popcount(gray)) % 2 == 0) {
      total += prod;
    } else {
      total -= prod;
    }
  }
  return total;
}

namespace {

void max_independent(const Graph& g, VertexSet candidates, int size,
                     int& best) {
  if (size + candidates.size() <= best) return;
  if (candidates.empty()) {
    best = size;
    return;
  }
  const int v = candidates.front();
  VertexSet rest = candidates;
  rest.erase(v);
  max_independent(g, rest - g.neighbors(v), size + 1, best);
  max_independent(g, rest, size, best);
}

void max_matching_edges(const std::vector<Edge>& edges, std::size_t next,
                        VertexSet used, int size, int free_vertices,
                        int& best) {
  if (size + free_vertices / 2 <= best) return;
  if (next == edges.size()) {
    best = std::max(best, size);
    return;
  }
  const Edge& e = edges[next];
  if (!used.contains(e.u) && !used.contains(e.v)) {
    VertexSet with = used;
    with.insert(e.u);
    with.insert(e.v);
    max_matching_edges(edges, next + 1, with, size + 1, free_vertices - 2,
                       best);
  }
  max_matching_edges(edges, next + 1, used, size, free_vertices, best);
}

}  // namespace

int alpha_bruteforce(const Graph& g, int cap) {
  if (g.order() > cap) {
    throw CapExceeded("independence number capped at n = " +
                      std::to_string(cap));
  }
  int best = 0;
  max_independent(g, g.vertices(), 0, best);
  return best;
}

int mu_bruteforce(const Graph& g, int cap) {
  if (g.order() > cap) {
    throw CapExceeded("brute-force matching number capped at n = " +
                      std::to_string(cap));
  }
  int best = 0;
  max_matching_edges(g.edges(), 0, VertexSet{}, 0, g.order(), best);
  return best;
}

}  // namespace kepf
