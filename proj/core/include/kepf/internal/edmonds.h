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

#ifndef KEPF_INTERNAL_EDMONDS_H_
#define KEPF_INTERNAL_EDMONDS_H_

#include <vector>

#include "kepf/graph.h"

namespace kepf::internal {

std::vector<int> edmonds(const Graph& g, VertexSet allowed,
                         std::vector<int> mate);

// Matching number of G[allowed].
int matching_number(const Graph& g, VertexSet allowed);

}  // namespace kepf::internal

#endif  // KEPF_INTERNAL_EDMONDS_H_
