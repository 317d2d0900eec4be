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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "kepf/decomposition.h"
#include "kepf/harness.h"
#include "kepf/oracles.h"
#include "kepf/sachs.h"
#include "support/fixtures.h"

namespace kepf {
namespace {

constexpr int kExhaustiveMax = 6;
constexpr int kLemmaMax = 5;
constexpr std::uint64_t kRandomSamples = 10'000;
constexpr double kOracleSecondsLimit = 120.0;
constexpr int kRandomOrders[] = {7, 8, 9};
constexpr double kRandomDensities[] = {0.3, 0.5};

std::uint64_t random_seed(int n, double p) {
  return 0x6b65'7066ULL * 1000 + static_cast<std::uint64_t>(n) * 10 +
         static_cast<std::uint64_t>(p * 10);
}

struct Totals {
  std::uint64_t graphs = 0;
  std::map<CheckId, CheckTally> tally;

  void add(const SweepReport& r) {
    graphs += r.graphs;
    for (const CheckTally& t : r.checks) {
      CheckTally& acc = tally.try_emplace(t.id, CheckTally{t.id}).first->second;
      acc.pass += t.pass;
      acc.fail += t.fail;
      acc.not_applicable += t.not_applicable;
      acc.cap_exceeded += t.cap_exceeded;
    }
  }
  const CheckTally& at(CheckId id) const { return tally.at(id); }
};

// Zero failures, zero cap hits, and at least one instance where the
// hypothesis held.
bool clean(const CheckTally& t) {
  return t.fail == 0 && t.cap_exceeded == 0 && t.pass > 0;
}

std::string describe(const CheckTally& t) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s pass=%llu fail=%llu n/a=%llu cap=%llu",
                std::string(check_name(t.id)).c_str(),
                static_cast<unsigned long long>(t.pass),
                static_cast<unsigned long long>(t.fail),
                static_cast<unsigned long long>(t.not_applicable),
                static_cast<unsigned long long>(t.cap_exceeded));
  return buf;
}

int workers() {
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

class Suite {
 public:
  void report(int number, const char* name, bool ok, const std::string& detail) {
    std::printf("%s criterion %d %s: %s\n", ok ? "PASS" : "FAIL", number, name,
                detail.c_str());
    std::fflush(stdout);
    failed_ += ok ? 0 : 1;
  }
  int failed() const { return failed_; }

 private:
  int failed_ = 0;
};

// Exhaustive sweeps per order, kept separate so each criterion can pick its
// own range.
std::vector<Totals> exhaustive_totals() {
  std::vector<Totals> out(kExhaustiveMax + 1);
  for (int n = 0; n <= kExhaustiveMax; ++n) {
    SweepSpec spec;
    spec.n = n;
    out[n].add(sweep(spec, {}, workers()));
  }
  return out;
}

Totals merge(const std::vector<Totals>& per_order, int max_n) {
  Totals t;
  for (int n = 0; n <= max_n; ++n) {
    t.graphs += per_order[n].graphs;
    for (const auto& [id, c] : per_order[n].tally) {
      CheckTally& acc = t.tally.try_emplace(id, CheckTally{id}).first->second;
      acc.pass += c.pass;
      acc.fail += c.fail;
      acc.not_applicable += c.not_applicable;
      acc.cap_exceeded += c.cap_exceeded;
    }
  }
  return t;
}

Totals random_totals() {
  Totals t;
  const CheckSet checks =
      CheckSet::of({CheckId::kDetFactorization, CheckId::kPermFactorization,
                    CheckId::kCrossingExclusion, CheckId::kMuAdditivity});
  for (int n : kRandomOrders) {
    for (double p : kRandomDensities) {
      SweepSpec spec;
      spec.mode = SweepMode::kRandom;
      spec.n = n;
      spec.p = p;
      spec.samples = kRandomSamples;
      spec.seed = random_seed(n, p);
      t.add(sweep(spec, {}, workers(), checks));
    }
  }
  return t;
}

void criterion_oracles(Suite& suite) {
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t graphs = 0, mismatches = 0;
  for (int n = 0; n <= kExhaustiveMax; ++n) {
    LabeledGraphStream stream(n);
    while (auto g = stream.next()) {
      const IntMatrix a = IntMatrix::adjacency(*g);
      if (det_sachs(*g) != det_bareiss(a)) ++mismatches;
      if (perm_sachs(*g) != perm_ryser(a)) ++mismatches;
      ++graphs;
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[160];
  std::snprintf(buf, sizeof buf, "graphs=%llu mismatches=%llu seconds=%.2f limit=%.0f",
                static_cast<unsigned long long>(graphs),
                static_cast<unsigned long long>(mismatches), seconds,
                kOracleSecondsLimit);
  suite.report(1, "sachs-oracle-agreement",
               mismatches == 0 && seconds < kOracleSecondsLimit, buf);
}

void criterion_fixtures(Suite& suite) {
  std::vector<std::string> wrong;
  auto expect = [&](bool ok, const char* what) {
    if (!ok) wrong.emplace_back(what);
  };
  {
    const Graph g = testing::paw();
    expect(is_koenig_egervary(g), "paw KE");
    expect(pf_pff_partition(g).block_a == g.vertices(), "paw PF=V");
    expect(det_sachs(g) == 1, "paw det");
  }
  {
    const Graph g = testing::c4();
    expect(pf_pff_partition(g).block_a.empty(), "C4 PF empty");
    expect(det_sachs(g) == 0, "C4 det");
    expect(perm_sachs(g) == 4, "C4 perm");
  }
  {
    const Graph g = testing::bowtie();
    expect(!is_koenig_egervary(g), "bowtie non-KE");
    expect(det_sachs(g) == -4, "bowtie det");
  }
  {
    const Graph g = testing::domino();
    expect(is_koenig_egervary(g), "domino KE");
    expect(maximum_matching(g).size() * 2 == g.order(), "domino perfect matching");
    expect(pf_pff_partition(g).block_a.empty(), "domino PF empty");
    expect(det_sachs(g) == -1, "domino det");
  }
  {
    const Graph g = disjoint_union(testing::paw(), testing::k2());
    const Partition p = pf_pff_partition(g);
    const BigInt pf_det = det_sachs(induced_subgraph(g, p.block_a).graph);
    const BigInt pff_det = det_sachs(induced_subgraph(g, p.block_b).graph);
    expect(det_sachs(g) == -1, "paw+K2 det");
    expect(pf_det == 1 && pff_det == -1, "paw+K2 block dets");
  }
  {
    const Graph g(0);
    expect(det_sachs(g) == 1 && perm_sachs(g) == 1, "empty det/perm");
    expect(det_bareiss(IntMatrix(0)) == 1 && perm_ryser(IntMatrix(0)) == 1,
           "empty oracles");
  }
  std::string detail = wrong.empty() ? "paw C4 bowtie domino paw+K2 empty" : "wrong:";
  for (const auto& w : wrong) detail += " [" + w + "]";
  suite.report(8, "named-fixtures", wrong.empty(), detail);
}

bool byte_identical(const std::function<std::string()>& produce) {
  const std::string first = produce();
  return !first.empty() && produce() == first && produce() == first;
}

void criterion_reproducibility(Suite& suite) {
  SweepSpec random;
  random.mode = SweepMode::kRandom;
  random.n = 8;
  random.p = 0.5;
  random.samples = 500;
  random.seed = 2026;
  SweepSpec exhaustive;
  exhaustive.n = 5;
  const bool sweeps = byte_identical([&] { return to_json(sweep(random, {}, 1)).dump(); }) &&
                      byte_identical([&] { return to_json(sweep(exhaustive)).dump(); });
  const bool workers_agree =
      to_json(sweep(random, {}, 1)).dump() == to_json(sweep(random, {}, 3)).dump();
  const bool searches = byte_identical([&] {
    return to_json(search(Predicate::kUnimodularPfFull, random)).dump();
  }) && byte_identical([&] {
    return to_json(search(Predicate::kUnimodularPffFull, exhaustive)).dump();
  });
  char buf[128];
  std::snprintf(buf, sizeof buf, "sweeps=%s searches=%s worker-counts=%s",
                sweeps ? "identical" : "differ", searches ? "identical" : "differ",
                workers_agree ? "identical" : "differ");
  suite.report(10, "byte-identical-reports", sweeps && searches && workers_agree, buf);
}

}  // namespace
}  // namespace kepf

int main() {
  using namespace kepf;
  Suite suite;

  criterion_oracles(suite);

  const std::vector<Totals> per_order = exhaustive_totals();
  const Totals small = merge(per_order, kExhaustiveMax);
  const Totals tiny = merge(per_order, kLemmaMax);
  const Totals random = random_totals();

  auto scope = [&](CheckId id) {
    const CheckTally& a = small.at(id);
    const CheckTally& b = random.at(id);
    return std::make_pair(clean(a) && clean(b),
                          "exhaustive " + describe(a) + "; random " + describe(b));
  };

  {
    auto [det_ok, det_detail] = scope(CheckId::kDetFactorization);
    auto [perm_ok, perm_detail] = scope(CheckId::kPermFactorization);
    suite.report(2, "pf-pff-factorization", det_ok && perm_ok,
                 det_detail + " | " + perm_detail);
  }
  {
    auto [ok, detail] = scope(CheckId::kCrossingExclusion);
    suite.report(3, "crossing-edge-exclusion", ok, detail);
  }
  {
    const CheckTally& odd = small.at(CheckId::kSsaNoOddCycle);
    const CheckTally& prk2 = small.at(CheckId::kPrkTwiceMu);
    const Graph k3 = testing::k3();
    const bool witness = !is_koenig_egervary(k3) && prk(k3) == 3 &&
                         2 * maximum_matching(k3).size() == 2;
    suite.report(4, "ssa-even-and-prk", clean(odd) && clean(prk2) && witness,
                 describe(odd) + "; " + describe(prk2) +
                     (witness ? "; K3 prk=3 2mu=2" : "; K3 witness wrong"));
  }
  {
    auto [ok, detail] = scope(CheckId::kMuAdditivity);
    suite.report(5, "mu-additivity", ok, detail);
  }
  {
    const CheckTally& t = small.at(CheckId::kSterboulEquivalence);
    suite.report(6, "flower-posy-equivalence", clean(t), describe(t));
  }
  {
    const CheckTally& t = tiny.at(CheckId::kAlternatingComponents);
    suite.report(7, "alternating-components", clean(t), describe(t));
  }
  criterion_fixtures(suite);
  {
    const CheckTally& t = small.at(CheckId::kSdKeDetFactorization);
    suite.report(9, "sd-ke-factorization", clean(t) && t.pass == small.graphs,
                 describe(t));
  }
  criterion_reproducibility(suite);

  std::printf("%d of 10 criteria failed\n", suite.failed());
  return suite.failed() == 0 ? 0 : 1;
}
