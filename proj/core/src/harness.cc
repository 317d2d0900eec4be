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

#include "kepf/harness.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "kepf/configurations.h"
#include "kepf/decomposition.h"
#include "kepf/error.h"
#include "kepf/internal/configuration_search.h"
#include "kepf/matching.h"
#include "kepf/oracles.h"
#include "kepf/sachs.h"
#include "kepf/version.h"

namespace kepf {

namespace {

constexpr std::array<std::string_view, kCheckCount> kCheckNames = {
    "thm-sterboul-equivalence",   "lemma-alternating-components",
    "lemma-ssa-no-odd-cycle",     "cor-prk-twice-mu",
    "thm-crossing-edge-exclusion", "thm-det-factorization",
    "thm-perm-factorization",     "cor-mu-additivity",
    "sdke-det-factorization",     "oracle-det-agreement",
    "oracle-perm-agreement",
};

constexpr std::array<std::string_view, 4> kPredicateNames = {
    "unimodular-pf-full",
    "unimodular-pff-full",
    "crossing-sachs-without-pm",
    "factorization-violation-non-ke",
};

nlohmann::json edges_json(const std::vector<Edge>& edges) {
  nlohmann::json out = nlohmann::json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::string str(const BigInt& x) { return x.str(); }

BigInt det_of(const Graph& g, VertexSet s) {
  return det_sachs(induced_subgraph(g, s).graph);
}

BigInt perm_of(const Graph& g, VertexSet s) {
  return perm_sachs(induced_subgraph(g, s).graph);
}

// Lazily computed per-graph quantities shared by the checks.
class Verifier {
 public:
  Verifier(const Graph& g, const Limits& limits)
      : g_(g), limits_(limits), graph6_(emit_graph6(g)) {
    facts_.order = g.order();
    facts_.edges = g.edge_count();
    mu_ = maximum_matching(g).size();
    facts_.mu = mu_;
    facts_.perfect_matching = 2 * mu_ == g.order();
    SachsTally tally = tally_sachs(g);
    det_ = tally.signed_sum();
    perm_ = tally.unsigned_sum();
    facts_.det = det_;
    facts_.perm = perm_;
  }

  GraphReport run(CheckSet checks) {
    GraphReport report;
    report.graph6 = graph6_;
    for (CheckId id : kAllChecks) {
      if (!checks.contains(id)) continue;
      CheckResult r{id, CheckStatus::kPass, std::nullopt, {}};
      try {
        r = run_one(id);
      } catch (const CapExceeded& e) {
        r = CheckResult{id, CheckStatus::kCapExceeded, std::nullopt, e.what()};
      }
      report.checks.push_back(std::move(r));
    }
    // Cheap facts that no selected check needed.
    try {
      ke();
    } catch (const CapExceeded&) {
    }
    report.facts = facts_;
    return report;
  }

 private:
  CheckResult run_one(CheckId id) {
    switch (id) {
      case CheckId::kSterboulEquivalence: return sterboul();
      case CheckId::kAlternatingComponents: return alternation();
      case CheckId::kSsaNoOddCycle: return ssa_no_odd_cycle();
      case CheckId::kPrkTwiceMu: return prk_twice_mu();
      case CheckId::kCrossingExclusion: return crossing_exclusion();
      case CheckId::kDetFactorization: return pf_factorization(id, false);
      case CheckId::kPermFactorization: return pf_factorization(id, true);
      case CheckId::kMuAdditivity: return mu_additivity();
      case CheckId::kSdKeDetFactorization: return sdke_factorization();
      case CheckId::kOracleDet: return oracle_det();
      case CheckId::kOraclePerm: return oracle_perm();
    }
    throw std::logic_error("unknown check");
  }

  CheckResult pass(CheckId id) { return {id, CheckStatus::kPass, std::nullopt, {}}; }
  CheckResult not_applicable(CheckId id) {
    return {id, CheckStatus::kNotApplicable, std::nullopt, {}};
  }
  CheckResult fail(CheckId id, nlohmann::json detail) {
    nlohmann::json w = {{"check", check_name(id)}, {"graph6", graph6_}};
    w.update(detail);
    return {id, CheckStatus::kFail, std::move(w), {}};
  }

  bool ke() {
    if (!alpha_) {
      alpha_ = alpha_bruteforce(g_, limits_.subset_cap);
      facts_.alpha = alpha_;
      facts_.koenig_egervary = *alpha_ + mu_ == g_.order();
    }
    return *facts_.koenig_egervary;
  }

  bool ke_with_perfect_matching() { return ke() && facts_.perfect_matching; }

  const std::vector<Matching>& maximum() {
    if (!maximum_) {
      maximum_ = enumerate_maximum_matchings(g_, limits_.max_matchings);
      facts_.maximum_matchings = maximum_->size();
    }
    return *maximum_;
  }

  VertexSet pf() {
    if (!facts_.pf) facts_.pf = pf_pff_partition(g_, maximum(), limits_).block_a;
    return *facts_.pf;
  }

  VertexSet sd() {
    if (!facts_.sd) facts_.sd = sd_ke_partition(g_, maximum(), limits_).block_a;
    return *facts_.sd;
  }

  CheckResult sterboul() {
    const CheckId id = CheckId::kSterboulEquivalence;
    const bool is_ke = ke();
    for (const Matching& m : maximum()) {
      internal::ConfigurationSearch search(g_, m, limits_.search_budget);
      const bool obstructed =
          search.first_flower().has_value() || search.first_posy().has_value();
      if (obstructed == is_ke) {
        return fail(id, {{"matching", edges_json(m.pairs())},
                         {"flower_or_posy", obstructed},
                         {"koenig_egervary", is_ke},
                         {"alpha", *alpha_},
                         {"mu", mu_}});
      }
    }
    return pass(id);
  }

  CheckResult alternation() {
    const CheckId id = CheckId::kAlternatingComponents;
    const auto& ms = maximum();
    for (std::size_t i = 0; i < ms.size(); ++i) {
      for (std::size_t j = i + 1; j < ms.size(); ++j) {
        auto comps = symmetric_difference_components(ms[i], ms[j]);
        std::size_t covered = 0;
        bool ok = true;
        for (const auto& c : comps) {
          covered += c.length();
          ok = ok && satisfies_alternation_lemma(c, ms[i], ms[j]);
        }
        std::size_t shared = 0;
        for (const Edge& e : ms[i].pairs()) shared += ms[j].contains(e.u, e.v);
        const std::size_t sym_diff =
            ms[i].pairs().size() + ms[j].pairs().size() - 2 * shared;
        if (!ok || covered != sym_diff) {
          return fail(id, {{"first", edges_json(ms[i].pairs())},
                           {"second", edges_json(ms[j].pairs())}});
        }
      }
    }
    return pass(id);
  }

  CheckResult ssa_no_odd_cycle() {
    const CheckId id = CheckId::kSsaNoOddCycle;
    if (!ke()) return not_applicable(id);
    for (const SachsSubgraph& h : enumerate_ssa(g_, limits_.subset_cap)) {
      if (h.has_odd_cycle()) {
        return fail(id, {{"sachs_edges", edges_json(h.edges())},
                         {"support", to_json(h.support)}});
      }
    }
    return pass(id);
  }

  CheckResult prk_twice_mu() {
    const CheckId id = CheckId::kPrkTwiceMu;
    if (!ke()) return not_applicable(id);
    const int r = prk(g_, limits_.subset_cap);
    if (r != 2 * mu_) return fail(id, {{"prk", r}, {"mu", mu_}});
    return pass(id);
  }

  CheckResult crossing_exclusion() {
    const CheckId id = CheckId::kCrossingExclusion;
    if (!ke_with_perfect_matching()) return not_applicable(id);
    const VertexSet a = pf();
    std::optional<SachsSubgraph> offender;
    for_each_sachs(g_, g_.vertices(), [&](const SachsSubgraph& h) {
      for (const Edge& e : h.edges()) {
        if (a.contains(e.u) != a.contains(e.v)) {
          offender = h;
          return true;
        }
      }
      return false;
    });
    if (offender) {
      return fail(id, {{"sachs_edges", edges_json(offender->edges())},
                       {"pf", to_json(a)}});
    }
    return pass(id);
  }

  CheckResult pf_factorization(CheckId id, bool permanent) {
    if (!ke()) return not_applicable(id);
    const VertexSet a = pf();
    const VertexSet b = g_.vertices() - a;
    const BigInt whole = permanent ? perm_ : det_;
    const BigInt left = permanent ? perm_of(g_, a) : det_of(g_, a);
    const BigInt right = permanent ? perm_of(g_, b) : det_of(g_, b);
    if (whole != left * right) {
      return fail(id, {{"pf", to_json(a)},
                       {"whole", str(whole)},
                       {"pf_block", str(left)},
                       {"pff_block", str(right)}});
    }
    return pass(id);
  }

  CheckResult mu_additivity() {
    const CheckId id = CheckId::kMuAdditivity;
    if (!ke_with_perfect_matching()) return not_applicable(id);
    const VertexSet a = pf();
    const int left = maximum_matching(induced_subgraph(g_, a).graph).size();
    const int right =
        maximum_matching(induced_subgraph(g_, g_.vertices() - a).graph).size();
    if (left + right != mu_) {
      return fail(id, {{"pf", to_json(a)},
                       {"mu", mu_},
                       {"mu_pf", left},
                       {"mu_pff", right}});
    }
    return pass(id);
  }

  CheckResult sdke_factorization() {
    const CheckId id = CheckId::kSdKeDetFactorization;
    const VertexSet s = sd();
    const BigInt left = det_of(g_, g_.vertices() - s);
    const BigInt right = det_of(g_, s);
    if (det_ != left * right) {
      return fail(id, {{"sd", to_json(s)},
                       {"whole", str(det_)},
                       {"ke_block", str(left)},
                       {"sd_block", str(right)}});
    }
    return pass(id);
  }

  CheckResult oracle_det() {
    const CheckId id = CheckId::kOracleDet;
    const BigInt oracle = det_bareiss(IntMatrix::adjacency(g_));
    if (oracle != det_) {
      return fail(id, {{"sachs", str(det_)}, {"bareiss", str(oracle)}});
    }
    return pass(id);
  }

  CheckResult oracle_perm() {
    const CheckId id = CheckId::kOraclePerm;
    const BigInt oracle = perm_ryser(IntMatrix::adjacency(g_), limits_.subset_cap);
    if (oracle != perm_) {
      return fail(id, {{"sachs", str(perm_)}, {"ryser", str(oracle)}});
    }
    return pass(id);
  }

  const Graph& g_;
  Limits limits_;
  std::string graph6_;
  GraphFacts facts_;
  int mu_ = 0;
  std::optional<int> alpha_;
  BigInt det_;
  BigInt perm_;
  std::optional<std::vector<Matching>> maximum_;
};

// Runs fn(index, worker) for every index in [0, count) on `workers` threads.
// Returns the per-worker states; the first exception raised is rethrown.
template <class State, class Fn>
std::vector<State> run_indexed(std::uint64_t count, int workers, Fn fn) {
  workers = std::max(1, workers);
  std::vector<State> states(static_cast<std::size_t>(workers));
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  constexpr std::uint64_t kChunk = 64;

  auto body = [&](State& state) {
    try {
      for (;;) {
        const std::uint64_t begin = next.fetch_add(kChunk);
        if (begin >= count) return;
        const std::uint64_t end = std::min(count, begin + kChunk);
        for (std::uint64_t i = begin; i < end; ++i) fn(i, state);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      next.store(count);
    }
  };

  if (workers == 1) {
    body(states[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(body, std::ref(states[w]));
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return states;
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(ws) - first + 1);
}

}  // namespace

std::string_view check_name(CheckId id) {
  return kCheckNames[static_cast<std::size_t>(id)];
}

std::optional<CheckId> parse_check_name(std::string_view name) {
  for (CheckId id : kAllChecks) {
    if (check_name(id) == name) return id;
  }
  return std::nullopt;
}

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kNotApplicable: return "not-applicable";
    case CheckStatus::kCapExceeded: return "cap-exceeded";
  }
  return "unknown";
}

bool GraphReport::has_failure() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::kFail;
  });
}

const CheckResult* GraphReport::find(CheckId id) const {
  for (const auto& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

GraphReport verify_graph(const Graph& g, const Limits& limits,
                         CheckSet checks) {
  return Verifier(g, limits).run(checks);
}

bool witness_still_fails(const nlohmann::json& witness, const Limits& limits) {
  const auto id = parse_check_name(witness.at("check").get<std::string>());
  if (!id) throw Error("witness names an unknown check");
  const Graph g = parse_graph6(witness.at("graph6").get<std::string>());
  const GraphReport r = verify_graph(g, limits, CheckSet::of({*id}));
  return r.find(*id)->status == CheckStatus::kFail;
}

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the pair.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

InstanceSource::InstanceSource(const SweepSpec& spec) : spec_(spec) {
  switch (spec.mode) {
    case SweepMode::kExhaustive:
      if (spec.n < 0 || spec.n > spec.exhaustive_cap) {
        throw CapExceeded("exhaustive sweeps are capped at n = " +
                          std::to_string(spec.exhaustive_cap));
      }
      count_ = labeled_graph_count(spec.n);
      break;
    case SweepMode::kRandom:
      if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
        throw Error("edge probability must lie in [0, 1]");
      }
      if (spec.n < 0 || spec.n > kDefaultVertexCap) {
        throw CapExceeded("random sweeps are capped at n = " +
                          std::to_string(kDefaultVertexCap));
      }
      count_ = spec.samples;
      break;
    case SweepMode::kStream: {
      std::ifstream in(spec.source);
      if (!in) throw Error("cannot read graph6 stream '" + spec.source + "'");
      std::string line;
      while (std::getline(in, line)) {
        std::string_view body = trim(line);
        constexpr std::string_view kHeader = ">>graph6<<";
        if (body.substr(0, kHeader.size()) == kHeader) {
          body.remove_prefix(kHeader.size());
        }
        if (!body.empty()) lines_.emplace_back(body);
      }
      count_ = lines_.size();
      break;
    }
  }
}

Graph InstanceSource::at(std::uint64_t index) const {
  switch (spec_.mode) {
    case SweepMode::kExhaustive: return labeled_graph(spec_.n, index);
    case SweepMode::kRandom:
      return random_graph(spec_.n, spec_.p, instance_seed(spec_.seed, index));
    case SweepMode::kStream:
      try {
        return parse_graph6(lines_.at(index));
      } catch (const ParseError& e) {
        throw ParseError(std::string("stream graph ") +
                         std::to_string(index + 1) + ": " + e.what());
      }
  }
  throw std::logic_error("unknown sweep mode");
}

CheckStatus CheckTally::status() const {
  if (fail > 0) return CheckStatus::kFail;
  if (pass > 0) return CheckStatus::kPass;
  if (cap_exceeded > 0) return CheckStatus::kCapExceeded;
  return CheckStatus::kNotApplicable;
}

std::uint64_t SweepReport::failure_count() const {
  std::uint64_t total = 0;
  for (const auto& c : checks) total += c.fail;
  return total;
}

SweepReport sweep(const SweepSpec& spec, const Limits& limits, int workers,
                  CheckSet checks) {
  const InstanceSource source(spec);

  struct State {
    std::array<CheckTally, kCheckCount> tallies{};
    std::vector<Failure> failures;
  };
  auto states = run_indexed<State>(
      source.size(), workers, [&](std::uint64_t i, State& state) {
        const GraphReport r = verify_graph(source.at(i), limits, checks);
        for (const CheckResult& c : r.checks) {
          CheckTally& t = state.tallies[static_cast<std::size_t>(c.id)];
          switch (c.status) {
            case CheckStatus::kPass: ++t.pass; break;
            case CheckStatus::kFail:
              ++t.fail;
              state.failures.push_back({i, r.graph6, c.id, *c.witness});
              break;
            case CheckStatus::kNotApplicable: ++t.not_applicable; break;
            case CheckStatus::kCapExceeded: ++t.cap_exceeded; break;
          }
        }
      });

  SweepReport report;
  report.spec = spec;
  report.graphs = source.size();
  for (CheckId id : kAllChecks) {
    if (!checks.contains(id)) continue;
    CheckTally total{id};
    for (const State& s : states) {
      const CheckTally& t = s.tallies[static_cast<std::size_t>(id)];
      total.pass += t.pass;
      total.fail += t.fail;
      total.not_applicable += t.not_applicable;
      total.cap_exceeded += t.cap_exceeded;
    }
    report.checks.push_back(total);
  }
  for (State& s : states) {
    std::move(s.failures.begin(), s.failures.end(),
              std::back_inserter(report.failures));
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const Failure& a, const Failure& b) {
              return std::pair(a.index, a.id) < std::pair(b.index, b.id);
            });
  return report;
}

std::string_view predicate_name(Predicate p) {
  return kPredicateNames[static_cast<std::size_t>(p)];
}

std::optional<Predicate> parse_predicate(std::string_view name) {
  for (std::size_t i = 0; i < kPredicateNames.size(); ++i) {
    if (kPredicateNames[i] == name) return static_cast<Predicate>(i);
  }
  return std::nullopt;
}

bool satisfies_predicate(Predicate p, const Graph& g, const Limits& limits) {
  auto ke = [&] {
    return alpha_bruteforce(g, limits.subset_cap) + maximum_matching(g).size() ==
           g.order();
  };
  switch (p) {
    case Predicate::kUnimodularPfFull:
    case Predicate::kUnimodularPffFull: {
      const BigInt det = det_sachs(g);
      if (det != 1 && det != -1) return false;
      if (!ke()) return false;
      const VertexSet pf = pf_pff_partition(g, limits).block_a;
      return p == Predicate::kUnimodularPfFull ? pf == g.vertices() : pf.empty();
    }
    case Predicate::kCrossingSachsWithoutPm: {
      if (2 * maximum_matching(g).size() == g.order() || !ke()) return false;
      const VertexSet pf = pf_pff_partition(g, limits).block_a;
      for (const SachsSubgraph& h : enumerate_ssa(g, limits.subset_cap)) {
        for (const Edge& e : h.edges()) {
          if (pf.contains(e.u) != pf.contains(e.v)) return true;
        }
      }
      return false;
    }
    case Predicate::kFactorizationViolationNonKe: {
      if (ke()) return false;
      const VertexSet a = pf_pff_partition(g, limits).block_a;
      const VertexSet b = g.vertices() - a;
      return det_sachs(g) != det_of(g, a) * det_of(g, b) ||
             perm_sachs(g) != perm_of(g, a) * perm_of(g, b);
    }
  }
  throw std::logic_error("unknown predicate");
}

SearchReport search(Predicate predicate, const SweepSpec& spec,
                    const Limits& limits, int workers) {
  const InstanceSource source(spec);

  struct State {
    std::uint64_t cap_exceeded = 0;
    std::vector<SearchMatch> matches;
  };
  auto states = run_indexed<State>(
      source.size(), workers, [&](std::uint64_t i, State& state) {
        const Graph g = source.at(i);
        try {
          if (satisfies_predicate(predicate, g, limits)) {
            state.matches.push_back({i, verify_graph(g, limits)});
          }
        } catch (const CapExceeded&) {
          ++state.cap_exceeded;
        }
      });

  SearchReport report;
  report.predicate = predicate;
  report.spec = spec;
  report.graphs = source.size();
  for (State& s : states) {
    report.cap_exceeded += s.cap_exceeded;
    std::move(s.matches.begin(), s.matches.end(),
              std::back_inserter(report.matches));
  }
  std::sort(report.matches.begin(), report.matches.end(),
            [](const SearchMatch& a, const SearchMatch& b) {
              return a.index < b.index;
            });
  return report;
}

std::string version_string() { return KEPF_VERSION_STRING; }

nlohmann::json to_json(VertexSet s) {
  nlohmann::json out = nlohmann::json::array();
  for (int v : s.members()) out.push_back(v);
  return out;
}

namespace {

nlohmann::json facts_json(const GraphFacts& f) {
  nlohmann::json j = {{"order", f.order},
                      {"edges", f.edges},
                      {"mu", f.mu},
                      {"perfect_matching", f.perfect_matching},
                      {"det", str(f.det)}};
  j["alpha"] = f.alpha ? nlohmann::json(*f.alpha) : nlohmann::json();
  j["koenig_egervary"] =
      f.koenig_egervary ? nlohmann::json(*f.koenig_egervary) : nlohmann::json();
  j["maximum_matchings"] = f.maximum_matchings
                               ? nlohmann::json(*f.maximum_matchings)
                               : nlohmann::json();
  j["perm"] = f.perm ? nlohmann::json(str(*f.perm)) : nlohmann::json();
  const VertexSet all = VertexSet::all(f.order);
  if (f.pf) {
    j["pf"] = to_json(*f.pf);
    j["pff"] = to_json(all - *f.pf);
  }
  if (f.sd) {
    j["sd"] = to_json(*f.sd);
    j["ke"] = to_json(all - *f.sd);
  }
  return j;
}

nlohmann::json check_json(const CheckResult& c) {
  nlohmann::json j = {{"id", check_name(c.id)}, {"status", status_name(c.status)}};
  if (c.witness) j["witness"] = *c.witness;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

}  // namespace

nlohmann::json to_json(const GraphReport& r, std::optional<double> timing_ms) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  nlohmann::json j = {{"input", r.graph6},
                      {"version", version_string()},
                      {"seed", nullptr},
                      {"facts", facts_json(r.facts)},
                      {"checks", checks}};
  if (timing_ms) j["timing_ms"] = *timing_ms;
  return j;
}

nlohmann::json to_json(const SweepSpec& s) {
  switch (s.mode) {
    case SweepMode::kExhaustive:
      return {{"mode", "exhaustive"}, {"n", s.n}};
    case SweepMode::kRandom:
      return {{"mode", "random"}, {"n", s.n}, {"samples", s.samples},
              {"p", s.p}, {"seed", s.seed}};
    case SweepMode::kStream:
      return {{"mode", "stream"}, {"source", s.source}};
  }
  return {};
}

nlohmann::json to_json(const SweepReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& t : r.checks) {
    checks.push_back({{"id", check_name(t.id)},
                      {"status", status_name(t.status())},
                      {"pass", t.pass},
                      {"fail", t.fail},
                      {"not_applicable", t.not_applicable},
                      {"cap_exceeded", t.cap_exceeded}});
  }
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"index", f.index},
                        {"graph6", f.graph6},
                        {"id", check_name(f.id)},
                        {"witness", f.witness}});
  }
  nlohmann::json j = {{"input", to_json(r.spec)},
                      {"version", version_string()},
                      {"seed", r.spec.seed},
                      {"graphs", r.graphs},
                      {"checks", checks},
                      {"failures", failures}};
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j;
}

nlohmann::json to_json(const SearchReport& r) {
  nlohmann::json matches = nlohmann::json::array();
  for (const auto& m : r.matches) {
    matches.push_back({{"index", m.index},
                       {"graph6", m.report.graph6},
                       {"report", to_json(m.report)}});
  }
  nlohmann::json j = {{"input", to_json(r.spec)},
                      {"version", version_string()},
                      {"seed", r.spec.seed},
                      {"predicate", predicate_name(r.predicate)},
                      {"graphs", r.graphs},
                      {"cap_exceeded", r.cap_exceeded},
                      {"matches", matches}};
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j;
}

}  // namespace kepf
