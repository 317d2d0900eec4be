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

#ifndef KEPF_TESTS_SUPPORT_FIXTURES_H_
#define KEPF_TESTS_SUPPORT_FIXTURES_H_

#include "kepf/graph.h"

namespace kepf::testing {

// Triangle 0,1,2 with pendant 3 at 2.
inline Graph paw() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }
inline Graph k2() { return Graph(2, {{0, 1}}); }
inline Graph k3() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }
inline Graph p3() { return Graph(3, {{0, 1}, {1, 2}}); }
inline Graph p5() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}); }
inline Graph c4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }
inline Graph k22() { return Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}); }
// Triangles 0,1,2 and 2,3,4 sharing vertex 2.
inline Graph bowtie() {
  return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}
// Triangles 0,1,2 and 3,4,5 joined by the bridge 2-3.
inline Graph dumbbell() {
  return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}
// Cycles 0-1-2-3 and 2-3-4-5 sharing the edge 2-3.
inline Graph domino() {
  return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}, {4, 5}, {2, 5}});
}

}  // namespace kepf::testing

#endif  // KEPF_TESTS_SUPPORT_FIXTURES_H_
