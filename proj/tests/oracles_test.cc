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

#include <gtest/gtest.h>

#include "kepf/error.h"
#include "kepf/oracles.h"
#include "support/brute_force.h"
#include "support/fixtures.h"

namespace kepf {
namespace {

TEST(OraclesTest, SmallMatrices) {
  EXPECT_EQ(det_bareiss(IntMatrix(0)), 1);
  EXPECT_EQ(perm_ryser(IntMatrix(0)), 1);
  IntMatrix m(2);
  m(0, 0) = 3;
  m(0, 1) = 1;
  m(1, 0) = 4;
  m(1, 1) = 2;
  EXPECT_EQ(det_bareiss(m), 2);
  EXPECT_EQ(perm_ryser(m), 10);
}

TEST(OraclesTest, PivotingNeeded) {
  IntMatrix m(2);
  m(0, 1) = 1;
  m(1, 0) = 1;
  EXPECT_EQ(det_bareiss(m), -1);
}

TEST(OraclesTest, AgainstNaiveExhaustive) {
  for (int n = 0; n <= 6; ++n) {
    LabeledGraphStream stream(n);
    while (auto g = stream.next()) {
      const auto rows = testing::adjacency_rows(*g);
      const IntMatrix a = IntMatrix::adjacency(*g);
      EXPECT_EQ(det_bareiss(a), testing::det_laplace(rows));
      EXPECT_EQ(perm_ryser(a), testing::perm_naive(rows));
      EXPECT_EQ(alpha_bruteforce(*g), testing::brute_alpha(*g));
      EXPECT_EQ(mu_bruteforce(*g), testing::brute_mu(*g));
    }
  }
}

TEST(OraclesTest, NamedValues) {
  EXPECT_EQ(alpha_bruteforce(testing::paw()), 2);
  EXPECT_EQ(mu_bruteforce(testing::paw()), 2);
  EXPECT_EQ(alpha_bruteforce(testing::k3()), 1);
  EXPECT_EQ(perm_ryser(IntMatrix::adjacency(testing::c4())), 4);
}

TEST(OraclesTest, Caps) {
  EXPECT_THROW(perm_ryser(IntMatrix(21)), CapExceeded);
  EXPECT_THROW(alpha_bruteforce(Graph(21)), CapExceeded);
  EXPECT_EQ(alpha_bruteforce(Graph(21), 21), 21);
}

}  // namespace
}  // namespace kepf
