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

#include <algorithm>

#include <gtest/gtest.h>

#include "kepf/error.h"
#include "kepf/matching.h"
#include "support/brute_force.h"
#include "support/fixtures.h"

namespace kepf {
namespace {

TEST(MatchingTest, FromPairsValidates) {
  Graph g = testing::paw();
  Matching m = Matching::from_pairs(g, {{0, 1}, {3, 2}});
  EXPECT_EQ(m.size(), 2);
  EXPECT_EQ(m.mate(3), 2);
  EXPECT_TRUE(m.contains(1, 0));
  EXPECT_TRUE(is_perfect(m));
  EXPECT_EQ(m.saturated(), g.vertices());
  EXPECT_THROW(Matching::from_pairs(g, {{0, 3}}), MatchingError);
  EXPECT_THROW(Matching::from_pairs(g, {{0, 1}, {1, 2}}), MatchingError);
  const std::vector<Edge> bad = {{0, 2}, {1, 2}};
  EXPECT_FALSE(is_matching(g, bad));
}

TEST(MatchingTest, MaximumMatchingSizes) {
  EXPECT_EQ(maximum_matching(testing::k3()).size(), 1);
  EXPECT_EQ(maximum_matching(testing::p5()).size(), 2);
  EXPECT_EQ(maximum_matching(testing::domino()).size(), 3);
  EXPECT_EQ(maximum_matching(testing::bowtie()).size(), 2);
  EXPECT_EQ(maximum_matching(Graph(0)).size(), 0);
}

TEST(MatchingTest, EnumerateMatchesBruteForceExhaustive) {
  for (int n = 0; n <= 6; ++n) {
    LabeledGraphStream stream(n);
    while (auto g = stream.next()) {
      const auto expected = testing::brute_maximum_matchings(*g);
      const auto got = enumerate_maximum_matchings(*g);
      ASSERT_EQ(got.size(), expected.size()) << emit_graph6(*g);
      for (std::size_t i = 0; i < got.size(); ++i) {
        EXPECT_EQ(got[i].pairs(), expected[i]);
      }
      EXPECT_EQ(maximum_matching(*g).size(), static_cast<int>(expected[0].size()));
    }
  }
}

TEST(MatchingTest, EnumerationCap) {
  Graph k6 = labeled_graph(6, (1ULL << 15) - 1);
  EXPECT_EQ(enumerate_maximum_matchings(k6).size(), 15U);
  EXPECT_THROW(enumerate_maximum_matchings(k6, 10), CapExceeded);
}

TEST(AlternationTest, C4TwoMatchings) {
  Graph g = testing::c4();
  Matching a = Matching::from_pairs(g, {{0, 1}, {2, 3}});
  Matching b = Matching::from_pairs(g, {{1, 2}, {0, 3}});
  auto comps = symmetric_difference_components(a, b);
  ASSERT_EQ(comps.size(), 1U);
  EXPECT_EQ(comps[0].kind, AltKind::kCycle);
  EXPECT_EQ(comps[0].vertices, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(comps[0].length(), 4U);
  EXPECT_TRUE(satisfies_alternation_lemma(comps[0], a, b));
  EXPECT_TRUE(symmetric_difference_components(a, a).empty());
}

TEST(AlternationTest, OddPathFlagged) {
  Graph g = testing::p3();
  Matching a = Matching::from_pairs(g, {{0, 1}});
  Matching b(3);
  auto comps = symmetric_difference_components(a, b);
  ASSERT_EQ(comps.size(), 1U);
  EXPECT_EQ(comps[0].kind, AltKind::kPath);
  EXPECT_FALSE(satisfies_alternation_lemma(comps[0], a, b));
  EXPECT_THROW(symmetric_difference_components(a, Matching(4)), MatchingError);
}

TEST(AlternationTest, MaximumPairsAlwaysEvenExhaustive) {
  for (int n = 0; n <= 5; ++n) {
    LabeledGraphStream stream(n);
    while (auto g = stream.next()) {
      const auto all = enumerate_maximum_matchings(*g);
      for (const auto& m1 : all) {
        for (const auto& m2 : all) {
          for (const auto& c : symmetric_difference_components(m1, m2)) {
            EXPECT_EQ(c.length() % 2, 0U);
            EXPECT_TRUE(satisfies_alternation_lemma(c, m1, m2));
            EXPECT_TRUE(std::adjacent_find(c.labels.begin(), c.labels.end()) ==
                        c.labels.end());
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace kepf
