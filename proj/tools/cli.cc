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

#include "cli.h"

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kepf/decomposition.h"
#include "kepf/error.h"
#include "kepf/harness.h"
#include "kepf/matching.h"
#include "kepf/sachs.h"

namespace kepf::cli {
namespace {

struct InputOptions {
  std::string format = "graph6";
  std::string graph6;
  std::string path;
};

struct OutputOptions {
  CLI::Option* json = nullptr;
  std::string json_path;
  bool timing = false;
};

struct SweepOptions {
  int n = 0;
  bool exhaustive = false;
  bool random = false;
  std::uint64_t samples = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::string stream;
  int parallel = 1;
};

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--format", in.format, "Input file format")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  cmd->add_option("--graph6", in.graph6, "Graph given inline as graph6");
  cmd->add_option("file", in.path, "Input file ('-' for stdin)");
}

void add_output(CLI::App* cmd, OutputOptions& o) {
  o.json = cmd->add_option("--json", o.json_path,
                           "Write the JSON report (stdout without a file)")
               ->expected(0, 1);
  cmd->add_flag("--timing", o.timing, "Include timing_ms in JSON reports");
}

void add_limits(CLI::App* cmd, Limits& limits) {
  cmd->add_option("--max-matchings-cap", limits.max_matchings,
                  "Maximum number of maximum matchings enumerated per graph");
  cmd->add_option("--budget", limits.search_budget,
                  "Expanded-state budget of the configuration search");
}

void add_sweep(CLI::App* cmd, SweepOptions& s) {
  cmd->add_option("--n", s.n, "Number of vertices");
  cmd->add_flag("--exhaustive", s.exhaustive, "All labeled graphs on n vertices");
  cmd->add_flag("--random", s.random, "Independent random graphs G(n, p)");
  cmd->add_option("--samples", s.samples, "Random instances");
  cmd->add_option("--p", s.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--seed", s.seed, "Random seed");
  cmd->add_option("--stream", s.stream, "graph6 file, one graph per line");
  cmd->add_option("--parallel", s.parallel, "Worker threads")
      ->check(CLI::PositiveNumber);
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Graph load_graph(const InputOptions& in) {
  if (!in.graph6.empty()) {
    if (!in.path.empty()) throw Error("give either --graph6 or a file, not both");
    return parse_graph6(in.graph6);
  }
  if (in.path.empty()) throw Error("no input graph: pass --graph6 or a file");
  std::string text;
  if (in.path == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream file(in.path);
    if (!file) throw Error("cannot read '" + in.path + "'");
    text = read_all(file);
  }
  if (in.format == "edgelist") return parse_edge_list(text);
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      return parse_graph6(line);
    }
  }
  throw ParseError("empty graph6 file");
}

SweepSpec make_spec(const SweepOptions& s) {
  const int modes = int{s.exhaustive} + int{s.random} + int{!s.stream.empty()};
  if (modes != 1) {
    throw Error("choose exactly one of --exhaustive, --random, --stream");
  }
  SweepSpec spec;
  spec.n = s.n;
  spec.p = s.p;
  spec.seed = s.seed;
  spec.samples = s.samples;
  if (s.exhaustive) {
    spec.mode = SweepMode::kExhaustive;
  } else if (s.random) {
    spec.mode = SweepMode::kRandom;
  } else {
    spec.mode = SweepMode::kStream;
    spec.source = s.stream;
  }
  return spec;
}

void emit_json(const OutputOptions& o, const nlohmann::json& j,
               std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (o.json_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.json_path, std::ios::binary);
  if (!file) throw Error("cannot write '" + o.json_path + "'");
  file << text;
}

bool wants_json(const OutputOptions& o) { return o.json->count() > 0; }

std::string members(VertexSet s) {
  std::string out;
  for (int v : s.members()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out.empty() ? "-" : out;
}

std::string edges_text(const std::vector<Edge>& edges) {
  std::string out;
  for (const Edge& e : edges) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return out.empty() ? "-" : out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

int run_decompose(const InputOptions& in, const OutputOptions& o,
                  const Limits& limits, std::ostream& out) {
  const Graph g = load_graph(in);
  const auto maximum = enumerate_maximum_matchings(g, limits.max_matchings);
  const Partition pf = pf_pff_partition(g, maximum, limits);
  const Partition sd = sd_ke_partition(g, maximum, limits);
  const bool ke = is_koenig_egervary(g, limits);
  if (wants_json(o)) {
    auto edge_list = [](const std::vector<Edge>& es) {
      nlohmann::json a = nlohmann::json::array();
      for (const Edge& e : es) a.push_back({e.u, e.v});
      return a;
    };
    emit_json(o,
              {{"input", emit_graph6(g)},
               {"version", version_string()},
               {"seed", nullptr},
               {"koenig_egervary", ke},
               {"maximum_matchings", maximum.size()},
               {"pf", to_json(pf.block_a)},
               {"pff", to_json(pf.block_b)},
               {"pf_crossing", edge_list(crossing_edges(g, pf))},
               {"sd", to_json(sd.block_a)},
               {"ke", to_json(sd.block_b)},
               {"sd_crossing", edge_list(crossing_edges(g, sd))}},
              out);
    return kExitOk;
  }
  out << "graph6: " << emit_graph6(g) << "\n"
      << "order: " << g.order() << "\n"
      << "koenig-egervary: " << (ke ? "yes" : "no") << "\n"
      << "maximum matchings: " << maximum.size() << "\n"
      << "PF: " << members(pf.block_a) << "\n"
      << "PFF: " << members(pf.block_b) << "\n"
      << "E(PF,PFF): " << edges_text(crossing_edges(g, pf)) << "\n"
      << "SD: " << members(sd.block_a) << "\n"
      << "KE: " << members(sd.block_b) << "\n"
      << "E(SD,KE): " << edges_text(crossing_edges(g, sd)) << "\n";
  return kExitOk;
}

int run_spectra(const InputOptions& in, const OutputOptions& o,
                const Limits& limits, std::ostream& out) {
  const Graph g = load_graph(in);
  const SpectralSummary s = spectral_summary(g, limits.subset_cap);
  const int mu = maximum_matching(g).size();
  if (wants_json(o)) {
    emit_json(o,
              {{"input", emit_graph6(g)},
               {"version", version_string()},
               {"seed", nullptr},
               {"det", s.det.str()},
               {"perm", s.perm.str()},
               {"sachs_count", s.sachs_count},
               {"prk", s.prk},
               {"mu", mu}},
              out);
    return kExitOk;
  }
  out << "graph6: " << emit_graph6(g) << "\n"
      << "det: " << s.det << "\n"
      << "perm: " << s.perm << "\n"
      << "sachs subgraphs: " << s.sachs_count << "\n"
      << "prk: " << s.prk << "\n"
      << "mu: " << mu << "\n";
  return kExitOk;
}

void print_checks(const GraphReport& r, std::ostream& out) {
  for (const auto& c : r.checks) {
    out << "  " << check_name(c.id) << ": " << status_name(c.status);
    if (!c.note.empty()) out << " (" << c.note << ")";
    out << "\n";
    if (c.witness) out << "    witness: " << c.witness->dump() << "\n";
  }
}

int run_verify(const InputOptions& in, const OutputOptions& o,
               const Limits& limits, std::ostream& out) {
  const Graph g = load_graph(in);
  const auto start = std::chrono::steady_clock::now();
  const GraphReport r = verify_graph(g, limits);
  const double ms = elapsed_ms(start);
  if (wants_json(o)) {
    emit_json(o, to_json(r, o.timing ? std::optional(ms) : std::nullopt), out);
  } else {
    const auto& f = r.facts;
    out << "graph6: " << r.graph6 << "\n"
        << "order: " << f.order << ", edges: " << f.edges << ", mu: " << f.mu
        << ", alpha: " << (f.alpha ? std::to_string(*f.alpha) : "?") << "\n"
        << "koenig-egervary: "
        << (f.koenig_egervary ? (*f.koenig_egervary ? "yes" : "no") : "?")
        << ", det: " << f.det << ", perm: " << (f.perm ? f.perm->str() : "?")
        << "\n"
        << "checks:\n";
    print_checks(r, out);
  }
  return r.has_failure() ? kExitCheckFailed : kExitOk;
}

int run_sweep(const SweepOptions& s, const OutputOptions& o,
              const Limits& limits, std::ostream& out) {
  const SweepSpec spec = make_spec(s);
  const auto start = std::chrono::steady_clock::now();
  SweepReport r = sweep(spec, limits, s.parallel);
  const double ms = elapsed_ms(start);
  if (o.timing) r.timing_ms = ms;
  if (wants_json(o)) {
    emit_json(o, to_json(r), out);
  } else {
    out << "graphs: " << r.graphs << "\n";
    for (const auto& c : r.checks) {
      out << "  " << check_name(c.id) << ": " << status_name(c.status())
          << " (pass " << c.pass << ", fail " << c.fail << ", n/a "
          << c.not_applicable << ", cap " << c.cap_exceeded << ")\n";
    }
    for (const auto& f : r.failures) {
      out << "failure " << check_name(f.id) << " on " << f.graph6 << ": "
          << f.witness.dump() << "\n";
    }
    out << "failures: " << r.failure_count() << "\n";
  }
  return r.failure_count() > 0 ? kExitCheckFailed : kExitOk;
}

int run_search(const std::string& predicate_text, const SweepOptions& s,
               const OutputOptions& o, const Limits& limits,
               std::ostream& out) {
  const auto predicate = parse_predicate(predicate_text);
  if (!predicate) throw Error("unknown predicate '" + predicate_text + "'");
  const SweepSpec spec = make_spec(s);
  const auto start = std::chrono::steady_clock::now();
  SearchReport r = search(*predicate, spec, limits, s.parallel);
  if (o.timing) r.timing_ms = elapsed_ms(start);
  bool failed = false;
  for (const auto& m : r.matches) failed = failed || m.report.has_failure();
  if (wants_json(o)) {
    emit_json(o, to_json(r), out);
  } else {
    for (const auto& m : r.matches) {
      out << m.report.graph6 << "\n";
    }
    out << "# " << r.matches.size() << " of " << r.graphs << " graphs match "
        << predicate_name(*predicate) << "; " << r.cap_exceeded
        << " skipped at caps\n";
  }
  return failed ? kExitCheckFailed : kExitOk;
}

int run_gen(const SweepOptions& s, const std::string& format,
            std::ostream& out) {
  SweepSpec spec = make_spec(s);
  if (spec.mode == SweepMode::kStream) throw Error("gen does not read streams");
  const InstanceSource source(spec);
  for (std::uint64_t i = 0; i < source.size(); ++i) {
    const Graph g = source.at(i);
    if (format == "edgelist") {
      out << emit_edge_list(g) << "\n";
    } else {
      out << emit_graph6(g) << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Exact König–Egerváry structure of small graphs"};
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);

  InputOptions in;
  // One per subcommand: each keeps a handle to its own --json option.
  OutputOptions decompose_out, spectra_out, verify_out, sweep_out, search_out;
  SweepOptions s;
  Limits limits;
  std::string predicate;
  std::string gen_format = "graph6";

  auto* decompose = app.add_subcommand("decompose", "PF/PFF and SD/KE partitions");
  add_input(decompose, in);
  add_output(decompose, decompose_out);
  add_limits(decompose, limits);

  auto* spectra = app.add_subcommand("spectra", "det, perm, Sachs count and prk");
  add_input(spectra, in);
  add_output(spectra, spectra_out);
  add_limits(spectra, limits);

  auto* verify = app.add_subcommand("verify", "Run every theorem check on one graph");
  add_input(verify, in);
  add_output(verify, verify_out);
  add_limits(verify, limits);

  auto* sweep_cmd = app.add_subcommand("sweep", "Run the checks over many graphs");
  add_sweep(sweep_cmd, s);
  add_output(sweep_cmd, sweep_out);
  add_limits(sweep_cmd, limits);

  auto* search_cmd = app.add_subcommand("search", "Find graphs with a property");
  add_sweep(search_cmd, s);
  add_output(search_cmd, search_out);
  add_limits(search_cmd, limits);
  search_cmd->add_option("--predicate", predicate, "Property to search for")
      ->required();

  auto* gen = app.add_subcommand("gen", "Print generated graphs");
  add_sweep(gen, s);
  gen->add_option("--format", gen_format, "Output format")
      ->check(CLI::IsMember({"graph6", "edgelist"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*decompose) return run_decompose(in, decompose_out, limits, out);
    if (*spectra) return run_spectra(in, spectra_out, limits, out);
    if (*verify) return run_verify(in, verify_out, limits, out);
    if (*sweep_cmd) return run_sweep(s, sweep_out, limits, out);
    if (*search_cmd) return run_search(predicate, s, search_out, limits, out);
    if (*gen) return run_gen(s, gen_format, out);
  } catch (const Error& e) {
    err << "kepf: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace kepf::cli
