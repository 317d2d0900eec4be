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

#ifndef KEPF_ORACLES_H_
#define KEPF_ORACLES_H_

#include <vector>

#include "kepf/bigint.h"
#include "kepf/graph.h"
#include "kepf/limits.h"

namespace kepf {

// Brute-force references. Each uses a different strategy from the routine it
// checks: elimination against the Sachs sum, subset scans against augmenting
// paths.

class IntMatrix {
 public:
  explicit IntMatrix(int n = 0) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  static IntMatrix adjacency(const Graph& g);

  int size() const { return n_; }
  BigInt& operator()(int i, int j) { return a_[i * n_ + j]; }
  const BigInt& operator()(int i, int j) const { return a_[i * n_ + j]; }

 private:
  int n_;
  std::vector<BigInt> a_;
};

// Fraction-free Gaussian elimination with row pivoting; det of 0x0 is 1.
BigInt det_bareiss(IntMatrix m);

// Ryser's inclusion-exclusion over column subsets, Gray-code ordered.
// Throws CapExceeded above `cap` rows.
BigInt perm_ryser(const IntMatrix& m, int cap = Limits{}.subset_cap);

// Independence number by include/exclude branching with a cardinality bound.
int alpha_bruteforce(const Graph& g, int cap = Limits{}.subset_cap);

// Matching number by edge-subset backtracking.
int mu_bruteforce(const Graph& g, int cap = Limits{}.subset_cap);

}  // namespace kepf

#endif  // KEPF_ORACLES_H_
