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

#ifndef KEPF_HARNESS_H_
#define KEPF_HARNESS_H_

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kepf/bigint.h"
#include "kepf/graph.h"
#include "kepf/limits.h"

namespace kepf {

// Theorem checks run by verify_graph. Each check whose hypothesis fails on a
// graph reports kNotApplicable, never kFail.
enum class CheckId {
  kSterboulEquivalence,   // flower-or-posy existence <=> not KE, per matching
  kAlternatingComponents, // M1 xor M2 components are even alternating
  kSsaNoOddCycle,         // KE: no element of SSa has an odd cycle
  kPrkTwiceMu,            // KE: prk = 2 mu
  kCrossingExclusion,     // KE with perfect matching: Sachs avoids E(PF, PFF)
  kDetFactorization,      // KE: det G = det G[PF] det G[PFF]
  kPermFactorization,     // KE: perm G = perm G[PF] perm G[PFF]
  kMuAdditivity,          // KE with perfect matching: mu splits over PF/PFF
  kSdKeDetFactorization,  // det G = det G[KE] det G[SD]
  kOracleDet,             // Sachs det = Bareiss det
  kOraclePerm,            // Sachs perm = Ryser perm
};

inline constexpr std::size_t kCheckCount = 11;
inline constexpr std::array<CheckId, kCheckCount> kAllChecks = {
    CheckId::kSterboulEquivalence,  CheckId::kAlternatingComponents,
    CheckId::kSsaNoOddCycle,        CheckId::kPrkTwiceMu,
    CheckId::kCrossingExclusion,    CheckId::kDetFactorization,
    CheckId::kPermFactorization,    CheckId::kMuAdditivity,
    CheckId::kSdKeDetFactorization, CheckId::kOracleDet,
    CheckId::kOraclePerm,
};

std::string_view check_name(CheckId id);
std::optional<CheckId> parse_check_name(std::string_view name);

class CheckSet {
 public:
  static CheckSet all() {
    CheckSet s;
    s.bits_.set();
    return s;
  }
  static CheckSet of(std::initializer_list<CheckId> ids) {
    CheckSet s;
    for (CheckId id : ids) s.bits_.set(static_cast<std::size_t>(id));
    return s;
  }
  bool contains(CheckId id) const {
    return bits_.test(static_cast<std::size_t>(id));
  }

 private:
  std::bitset<kCheckCount> bits_;
};

enum class CheckStatus { kPass, kFail, kNotApplicable, kCapExceeded };
std::string_view status_name(CheckStatus s);

struct CheckResult {
  CheckId id;
  CheckStatus status;
  // Present when status is kFail: self-contained evidence carrying the graph6
  // string and the check name, enough to re-run the check.
  std::optional<nlohmann::json> witness;
  // Diagnostic for kCapExceeded.
  std::string note;
};

// Quantities computed while verifying one graph. Optional entries stay empty
// when a cap prevented their computation.
struct GraphFacts {
  int order = 0;
  std::size_t edges = 0;
  int mu = 0;
  std::optional<int> alpha;
  std::optional<bool> koenig_egervary;
  bool perfect_matching = false;
  std::optional<std::size_t> maximum_matchings;
  std::optional<VertexSet> pf;
  std::optional<VertexSet> sd;
  BigInt det;
  std::optional<BigInt> perm;
};

struct GraphReport {
  std::string graph6;
  GraphFacts facts;
  std::vector<CheckResult> checks;

  bool has_failure() const;
  const CheckResult* find(CheckId id) const;
};

GraphReport verify_graph(const Graph& g, const Limits& limits = {},
                         CheckSet checks = CheckSet::all());

// Re-runs the witnessed check from the witness alone. True iff it still
// fails.
bool witness_still_fails(const nlohmann::json& witness,
                         const Limits& limits = {});

enum class SweepMode { kExhaustive, kRandom, kStream };

struct SweepSpec {
  SweepMode mode = SweepMode::kExhaustive;
  int n = 0;
  std::uint64_t samples = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  // graph6 stream file, one graph per line (stream mode).
  std::string source;
  int exhaustive_cap = kDefaultEnumerationCap;
};

// Random-mode instance i is random_graph(n, p, instance_seed(seed, i)).
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);

// Indexed view of the instances a sweep spec describes. Stream files are
// read up front; lines are parsed on access.
class InstanceSource {
 public:
  explicit InstanceSource(const SweepSpec& spec);

  std::uint64_t size() const { return count_; }
  Graph at(std::uint64_t index) const;

 private:
  SweepSpec spec_;
  std::uint64_t count_ = 0;
  std::vector<std::string> lines_;
};

struct CheckTally {
  CheckId id;
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t not_applicable = 0;
  std::uint64_t cap_exceeded = 0;

  CheckStatus status() const;
};

struct Failure {
  std::uint64_t index = 0;
  std::string graph6;
  CheckId id;
  nlohmann::json witness;
};

struct SweepReport {
  SweepSpec spec;
  std::uint64_t graphs = 0;
  std::vector<CheckTally> checks;
  std::vector<Failure> failures;
  std::optional<double> timing_ms;

  std::uint64_t failure_count() const;
};

// Runs verify_graph over every instance with `workers` threads. Counters are
// summed and failures sorted by instance, so the report does not depend on
// scheduling.
SweepReport sweep(const SweepSpec& spec, const Limits& limits = {},
                  int workers = 1, CheckSet checks = CheckSet::all());

enum class Predicate {
  kUnimodularPfFull,            // KE, det = +-1, PF(G) = V(G)
  kUnimodularPffFull,           // KE, det = +-1, PF(G) = empty
  kCrossingSachsWithoutPm,      // KE, no perfect matching, SSa crosses PF/PFF
  kFactorizationViolationNonKe  // not KE, PF/PFF det or perm identity fails
};

std::string_view predicate_name(Predicate p);
std::optional<Predicate> parse_predicate(std::string_view name);

// Throws CapExceeded when a needed quantity is beyond the limits.
bool satisfies_predicate(Predicate p, const Graph& g, const Limits& limits = {});

struct SearchMatch {
  std::uint64_t index = 0;
  GraphReport report;
};

struct SearchReport {
  Predicate predicate;
  SweepSpec spec;
  std::uint64_t graphs = 0;
  std::uint64_t cap_exceeded = 0;
  std::vector<SearchMatch> matches;
  std::optional<double> timing_ms;
};

SearchReport search(Predicate predicate, const SweepSpec& spec,
                    const Limits& limits = {}, int workers = 1);

std::string version_string();

nlohmann::json to_json(const GraphReport& r,
                       std::optional<double> timing_ms = std::nullopt);
nlohmann::json to_json(const SweepSpec& s);
nlohmann::json to_json(const SweepReport& r);
nlohmann::json to_json(const SearchReport& r);

// Ascending member list, as used in the reports.
nlohmann::json to_json(VertexSet s);

}  // namespace kepf

#endif  // KEPF_HARNESS_H_
