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

#include <string>

#include <gtest/gtest.h>

#include "kepf/error.h"
#include "kepf/harness.h"
#include "support/fixtures.h"

namespace kepf {
namespace {

TEST(HarnessTest, CheckNamesRoundTrip) {
  for (CheckId id : kAllChecks) {
    EXPECT_EQ(parse_check_name(check_name(id)), id);
  }
  EXPECT_FALSE(parse_check_name("nope").has_value());
  EXPECT_EQ(status_name(CheckStatus::kNotApplicable), "not-applicable");
}

TEST(HarnessTest, VerifyPaw) {
  GraphReport r = verify_graph(testing::paw());
  EXPECT_EQ(r.graph6, "Cx");
  EXPECT_FALSE(r.has_failure());
  EXPECT_EQ(r.checks.size(), kCheckCount);
  EXPECT_EQ(r.facts.koenig_egervary, true);
  EXPECT_TRUE(r.facts.perfect_matching);
  EXPECT_EQ(r.facts.pf, testing::paw().vertices());
  EXPECT_EQ(r.facts.det, 1);
  EXPECT_EQ(r.find(CheckId::kDetFactorization)->status, CheckStatus::kPass);
}

TEST(HarnessTest, NonKeChecksNotApplicable) {
  GraphReport r = verify_graph(testing::k3());
  EXPECT_EQ(r.facts.koenig_egervary, false);
  EXPECT_EQ(r.find(CheckId::kPrkTwiceMu)->status, CheckStatus::kNotApplicable);
  EXPECT_EQ(r.find(CheckId::kSdKeDetFactorization)->status, CheckStatus::kPass);
  EXPECT_EQ(r.find(CheckId::kSterboulEquivalence)->status, CheckStatus::kPass);
}

TEST(HarnessTest, CheckSubset) {
  GraphReport r = verify_graph(testing::c4(), {}, CheckSet::of({CheckId::kOracleDet}));
  ASSERT_EQ(r.checks.size(), 1U);
  EXPECT_EQ(r.checks[0].id, CheckId::kOracleDet);
  EXPECT_EQ(r.find(CheckId::kOraclePerm), nullptr);
}

TEST(HarnessTest, CapExceededStatus) {
  Limits limits;
  limits.max_matchings = 1;
  GraphReport r = verify_graph(testing::c4(), limits);
  EXPECT_EQ(r.find(CheckId::kDetFactorization)->status, CheckStatus::kCapExceeded);
  EXPECT_FALSE(r.find(CheckId::kDetFactorization)->note.empty());
  EXPECT_EQ(r.find(CheckId::kOracleDet)->status, CheckStatus::kPass);
}

TEST(HarnessTest, WitnessForUnknownCheckIsRejected) {
  nlohmann::json w = {{"check", "thm-det-factorization"}, {"graph6", "Cx"}};
  EXPECT_FALSE(witness_still_fails(w));
  EXPECT_THROW(witness_still_fails({{"check", "bogus"}, {"graph6", "Cx"}}), Error);
}

TEST(HarnessTest, ExhaustiveSweepSmall) {
  SweepSpec spec;
  spec.n = 4;
  SweepReport r = sweep(spec);
  EXPECT_EQ(r.graphs, 64U);
  EXPECT_EQ(r.failure_count(), 0U);
  for (const CheckTally& t : r.checks) {
    EXPECT_EQ(t.pass + t.fail + t.not_applicable + t.cap_exceeded, 64U);
    EXPECT_EQ(t.fail, 0U);
  }
}

TEST(HarnessTest, ExhaustiveCap) {
  SweepSpec spec;
  spec.n = 8;
  EXPECT_THROW(sweep(spec), CapExceeded);
}

TEST(HarnessTest, RandomSweepIsDeterministicAcrossWorkers) {
  SweepSpec spec;
  spec.mode = SweepMode::kRandom;
  spec.n = 7;
  spec.samples = 200;
  spec.p = 0.4;
  spec.seed = 11;
  const auto a = to_json(sweep(spec, {}, 1)).dump();
  const auto b = to_json(sweep(spec, {}, 4)).dump();
  EXPECT_EQ(a, b);
  InstanceSource src(spec);
  EXPECT_EQ(src.size(), 200U);
  EXPECT_EQ(src.at(5), random_graph(7, 0.4, instance_seed(11, 5)));
  EXPECT_NE(instance_seed(11, 5), instance_seed(11, 6));
}

TEST(HarnessTest, StreamSource) {
  SweepSpec spec;
  spec.mode = SweepMode::kStream;
  spec.source = std::string(KEPF_TEST_DATA_DIR) + "/stream.g6";
  InstanceSource src(spec);
  ASSERT_EQ(src.size(), 3U);
  EXPECT_EQ(src.at(0), testing::domino());
  EXPECT_EQ(src.at(1), testing::paw());
  EXPECT_EQ(src.at(2), testing::bowtie());
  SweepReport r = sweep(spec);
  EXPECT_EQ(r.graphs, 3U);
  EXPECT_EQ(r.failure_count(), 0U);
  spec.source = "/nonexistent/file.g6";
  EXPECT_THROW(InstanceSource{spec}, Error);
}

TEST(HarnessTest, Predicates) {
  for (Predicate p : {Predicate::kUnimodularPfFull, Predicate::kUnimodularPffFull,
                      Predicate::kCrossingSachsWithoutPm,
                      Predicate::kFactorizationViolationNonKe}) {
    EXPECT_EQ(parse_predicate(predicate_name(p)), p);
  }
  EXPECT_TRUE(satisfies_predicate(Predicate::kUnimodularPfFull, testing::paw()));
  EXPECT_FALSE(satisfies_predicate(Predicate::kUnimodularPffFull, testing::paw()));
  EXPECT_TRUE(satisfies_predicate(Predicate::kUnimodularPffFull, testing::domino()));
  EXPECT_FALSE(satisfies_predicate(Predicate::kUnimodularPfFull, testing::k3()));
}

TEST(HarnessTest, SearchFindsPaw) {
  SweepSpec spec;
  spec.n = 4;
  SearchReport r = search(Predicate::kUnimodularPfFull, spec);
  EXPECT_EQ(r.graphs, 64U);
  bool found = false;
  for (const auto& m : r.matches) found = found || m.report.graph6 == "Cx";
  EXPECT_TRUE(found);
}

TEST(HarnessTest, JsonShape) {
  nlohmann::json j = to_json(verify_graph(testing::paw()));
  EXPECT_EQ(j["input"], "Cx");
  EXPECT_FALSE(j.contains("timing_ms"));
  EXPECT_EQ(to_json(VertexSet{3, 1}), nlohmann::json::parse("[1,3]"));
  nlohmann::json t = to_json(verify_graph(testing::paw()), 1.5);
  EXPECT_EQ(t["timing_ms"], 1.5);
  EXPECT_EQ(to_json(verify_graph(testing::paw())).dump(), j.dump());
}

}  // namespace
}  // namespace kepf
