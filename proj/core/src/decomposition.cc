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

#include "kepf/decomposition.h"

#include <stdexcept>

#include "kepf/error.h"
#include "kepf/internal/configuration_search.h"
#include "kepf/oracles.h"

namespace kepf {

bool is_koenig_egervary(const Graph& g, const Limits& limits) {
  const int alpha = alpha_bruteforce(g, limits.subset_cap);
  const Matching m = maximum_matching(g);
  const bool ke = alpha + m.size() == g.order();
  if (g.order() <= limits.ke_cross_check_cap) {
    internal::ConfigurationSearch search(g, m, limits.search_budget);
    const bool obstructed =
        search.first_flower().has_value() || search.first_posy().has_value();
    if (obstructed == ke) {
      throw std::logic_error(
          "independence number and flower/posy search disagree on " +
          emit_graph6(g));
    }
  }
  return ke;
}

Partition sd_ke_partition(const Graph& g, const std::vector<Matching>& maximum,
                          const Limits& limits) {
  VertexSet sd;
  for (const Matching& m : maximum) {
    if (sd == g.vertices()) break;
    sd |= internal::ConfigurationSearch(g, m, limits.search_budget)
              .flower_posy_cover();
  }
  return {PartitionKind::kSdKe, g.order(), sd, g.vertices() - sd};
}

Partition pf_pff_partition(const Graph& g,
                           const std::vector<Matching>& maximum,
                           const Limits& limits) {
  VertexSet pf;
  for (const Matching& m : maximum) {
    if (pf == g.vertices()) break;
    pf |= internal::ConfigurationSearch(g, m, limits.search_budget)
              .perfect_flower_cover();
  }
  return {PartitionKind::kPfPff, g.order(), pf, g.vertices() - pf};
}

Partition sd_ke_partition(const Graph& g, const Limits& limits) {
  return sd_ke_partition(g, enumerate_maximum_matchings(g, limits.max_matchings),
                         limits);
}

Partition pf_pff_partition(const Graph& g, const Limits& limits) {
  return pf_pff_partition(
      g, enumerate_maximum_matchings(g, limits.max_matchings), limits);
}

std::vector<Edge> crossing_edges(const Graph& g, const Partition& p) {
  if (p.order != g.order()) {
    throw GraphError("partition and graph have different orders");
  }
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (p.block_a.contains(e.u) != p.block_a.contains(e.v)) out.push_back(e);
  }
  return out;
}

}  // namespace kepf
