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

#ifndef KEPF_INTERNAL_CONFIGURATION_SEARCH_H_
#define KEPF_INTERNAL_CONFIGURATION_SEARCH_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "kepf/configurations.h"

namespace kepf::internal {

// Throws MatchingError unless `m` is a maximum matching of `g`.
void require_maximum(const Graph& g, const Matching& m);

// Exhaustive configuration search for one (graph, maximum matching) pair.
// Blossoms are enumerated once on construction; the remaining queries walk
// M-alternating paths leaving a blossom base along its M edge. Every
// expanded state counts against the budget.
class ConfigurationSearch {
 public:
  // Receives the current path (ending on an M edge) and the visited set
  // (cycle plus path). Returning true stops the walk.
  using PrefixVisitor =
      std::function<bool(const std::vector<int>&, VertexSet)>;
  // Receives the current path, the visited set and an exposed vertex adjacent
  // to the path's end along a non-M edge.
  using RootVisitor =
      std::function<bool(const std::vector<int>&, VertexSet, int)>;

  ConfigurationSearch(const Graph& g, const Matching& m, std::uint64_t budget);

  const std::vector<Blossom>& blossoms() const { return blossoms_; }
  std::uint64_t states() const { return states_; }

  std::optional<Flower> first_flower();
  std::optional<Posy> first_posy();
  std::optional<PerfectFlower> first_perfect_flower();

  VertexSet perfect_flower_cover();
  VertexSet flower_posy_cover();

 private:
  void tick();
  void grow_cycles(std::vector<int>& path, VertexSet visited);
  bool walk(std::vector<int>& path, VertexSet visited,
            const PrefixVisitor& on_prefix, const RootVisitor& on_root);
  bool alternating_paths(std::size_t blossom, const PrefixVisitor& on_prefix,
                         const RootVisitor& on_root);

  const Graph& g_;
  const Matching& m_;
  std::uint64_t budget_;
  std::uint64_t states_ = 0;
  std::vector<Blossom> blossoms_;
  std::vector<VertexSet> blossom_sets_;
  std::vector<std::vector<std::size_t>> by_base_;
};

}  // namespace kepf::internal

#endif  // KEPF_INTERNAL_CONFIGURATION_SEARCH_H_
