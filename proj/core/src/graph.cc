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

#include "kepf/graph.h"

#include <algorithm>
#include <charconv>
#include <random>

#include "kepf/error.h"

namespace kepf {

VertexSet::VertexSet(std::initializer_list<int> members) {
  for (int v : members) insert(v);
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

Graph::Graph(int n, std::span<const Edge> edges, int vertex_cap) {
  build(n, edges, vertex_cap);
}

Graph::Graph(int n, std::initializer_list<Edge> edges, int vertex_cap) {
  build(n, std::span<const Edge>(edges.begin(), edges.size()), vertex_cap);
}

void Graph::build(int n, std::span<const Edge> edges, int vertex_cap) {
  if (vertex_cap < 0 || vertex_cap > kMaxVertexCap) {
    throw GraphError("vertex cap must lie in [0, " +
                     std::to_string(kMaxVertexCap) + "]");
  }
  if (n < 0 || n > vertex_cap) {
    throw GraphError("order " + std::to_string(n) + " outside [0, " +
                     std::to_string(vertex_cap) + "]");
  }
  n_ = n;
  adj_.assign(n, 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw GraphError("edge (" + std::to_string(e.u) + ", " +
                       std::to_string(e.v) + ") has an endpoint outside [0, " +
                       std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    adj_[e.u] |= std::uint64_t{1} << e.v;
    adj_[e.v] |= std::uint64_t{1} << e.u;
  }
  for (int u = 0; u < n; ++u) {
    for (std::uint64_t b = adj_[u] >> u; b != 0; b &= b - 1) {
      int v = u + std::countr_zero(b);
      if (v > u) edges_.push_back({u, v});
    }
  }
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

// Splits on blanks; empty tokens are dropped.
std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view tok, std::size_t line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("malformed token '" + std::string(tok) + "'", line);
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text, int vertex_cap) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }

  std::size_t header = 0;
  while (header < lines.size() && trim(lines[header]).empty()) ++header;
  if (header == lines.size()) throw ParseError("missing vertex count");
  auto head = tokens(trim(lines[header]));
  if (head.size() != 1) {
    throw ParseError("first line must hold only the vertex count", header + 1);
  }
  int n = parse_int(head[0], header + 1);
  if (n < 0 || n > vertex_cap) {
    throw ParseError("vertex count " + std::to_string(n) + " outside [0, " +
                         std::to_string(vertex_cap) + "]",
                     header + 1);
  }

  std::vector<Edge> edges;
  for (std::size_t i = header + 1; i < lines.size(); ++i) {
    auto line = trim(lines[i]);
    if (line.empty()) continue;
    auto toks = tokens(line);
    if (toks.size() != 2) throw ParseError("expected 'u v'", i + 1);
    int u = parse_int(toks[0], i + 1);
    int v = parse_int(toks[1], i + 1);
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError("vertex index out of range [0, " + std::to_string(n) +
                           ")",
                       i + 1);
    }
    if (u == v) throw ParseError("self-loop", i + 1);
    edges.push_back({std::min(u, v), std::max(u, v)});
  }
  return Graph(n, edges, vertex_cap);
}

std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty graph6 string");
  for (char c : text) {
    auto u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126) {
      throw ParseError("graph6 character " + std::to_string(u) +
                       " outside 63..126");
    }
  }
  int n = text[0] - 63;
  if (n > kGraph6MaxOrder) {
    throw ParseError("graph6 orders above 62 are not supported");
  }
  const int bits = pair_count(n);
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  const auto payload = text.substr(1);
  if (payload.size() < need) throw ParseError("truncated graph6 payload");
  if (payload.size() > need) throw ParseError("trailing graph6 payload");

  std::vector<Edge> edges;
  int k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      int group = payload[k / 6] - 63;
      if ((group >> (5 - k % 6)) & 1) edges.push_back({u, v});
    }
  }
  return Graph(n, edges, kMaxVertexCap);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw GraphError("graph6 orders above 62 are not supported");
  }
  std::string out(1, static_cast<char>(63 + n));
  const int bits = pair_count(n);
  std::string payload(static_cast<std::size_t>((bits + 5) / 6), 0);
  int k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      if (g.adjacent(u, v)) payload[k / 6] |= static_cast<char>(1 << (5 - k % 6));
    }
  }
  for (char& c : payload) c = static_cast<char>(c + 63);
  return out + payload;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) {
    throw GraphError("vertex set has members outside the host graph");
  }
  InducedSubgraph out;
  out.original = s.members();
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    index[out.original[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) {
      edges.push_back({index[e.u], index[e.v]});
    }
  }
  out.graph = Graph(static_cast<int>(out.original.size()), edges, kMaxVertexCap);
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int shift = g.order();
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : h.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(g.order() + h.order(), edges, kMaxVertexCap);
}

Graph labeled_graph(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      if ((mask >> k) & 1U) edges.push_back({u, v});
    }
  }
  return Graph(n, edges, kMaxVertexCap);
}

std::uint64_t labeled_graph_count(int n) {
  if (n < 0 || pair_count(n) >= 64) {
    throw CapExceeded("labeled graph count overflows for n = " +
                      std::to_string(n));
  }
  return std::uint64_t{1} << pair_count(n);
}

LabeledGraphStream::LabeledGraphStream(int n, int cap) : n_(n) {
  if (n < 0) throw GraphError("negative order");
  if (n > cap) {
    throw CapExceeded("exhaustive enumeration capped at n = " +
                      std::to_string(cap));
  }
  count_ = labeled_graph_count(n);
}

std::optional<Graph> LabeledGraphStream::next() {
  if (mask_ >= count_) return std::nullopt;
  return labeled_graph(n_, mask_++);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw GraphError("edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) edges.push_back({u, v});
    }
  }
  return Graph(n, edges, kMaxVertexCap);
}

}  // namespace kepf
