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

#ifndef KEPF_LIMITS_H_
#define KEPF_LIMITS_H_

#include <cstddef>
#include <cstdint>

namespace kepf {

// Caps shared by the exhaustive routines. Exceeding any of them raises
// CapExceeded (or BudgetExceeded for the configuration search).
struct Limits {
  // Maximum number of maximum matchings enumerated per graph.
  std::size_t max_matchings = 1'000'000;
  // Expanded-state budget for one blossom/flower/posy search.
  std::uint64_t search_budget = 10'000'000;
  // Largest order accepted by subset scans (prk, SSa, alpha, Ryser).
  int subset_cap = 20;
  // König–Egerváry recognition re-derives its answer from the
  // flower/posy characterization up to this order.
  int ke_cross_check_cap = 10;
};

}  // namespace kepf

#endif  // KEPF_LIMITS_H_
