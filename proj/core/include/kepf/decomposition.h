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

#ifndef KEPF_DECOMPOSITION_H_
#define KEPF_DECOMPOSITION_H_

#include <vector>

#include "kepf/graph.h"
#include "kepf/limits.h"
#include "kepf/matching.h"

namespace kepf {

enum class PartitionKind {
  kSdKe,  // block_a = SD(G), block_b = KE(G)
  kPfPff  // block_a = PF(G), block_b = PFF(G)
};

// Ordered two-block split of the vertices of a graph of order `order`.
struct Partition {
  PartitionKind kind = PartitionKind::kPfPff;
  int order = 0;
  VertexSet block_a;
  VertexSet block_b;

  bool valid() const {
    return (block_a & block_b).empty() &&
           (block_a | block_b) == VertexSet::all(order);
  }
};

// alpha(G) + mu(G) == |G|, with alpha from the brute-force oracle. Up to
// limits.ke_cross_check_cap vertices the answer is also re-derived from the
// flower/posy characterization on one maximum matching; a disagreement
// throws std::logic_error.
bool is_koenig_egervary(const Graph& g, const Limits& limits = {});

// SD(G): vertices lying in an M-flower or M-posy for some maximum matching M.
Partition sd_ke_partition(const Graph& g, const Limits& limits = {});
// PF(G): vertices lying in an M-perfect flower for some maximum matching M.
Partition pf_pff_partition(const Graph& g, const Limits& limits = {});

// Both partitions from one pass over precomputed maximum matchings.
Partition sd_ke_partition(const Graph& g, const std::vector<Matching>& maximum,
                          const Limits& limits = {});
Partition pf_pff_partition(const Graph& g,
                           const std::vector<Matching>& maximum,
                           const Limits& limits = {});

// Host edges with one endpoint in each block, sorted. Throws GraphError if
// the partition was built for a graph of a different order.
std::vector<Edge> crossing_edges(const Graph& g, const Partition& p);

}  // namespace kepf

#endif  // KEPF_DECOMPOSITION_H_
