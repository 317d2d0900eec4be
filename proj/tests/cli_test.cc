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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.h"

namespace kepf::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "kepf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

TEST(CliTest, DecomposeGraph6) {
  Outcome r = run({"decompose", "--graph6", "Cx", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["input"], "Cx");
}

TEST(CliTest, DecomposeEdgeListFile) {
  const std::string path = temp_path("kepf_cli_paw.txt");
  std::ofstream(path) << "4\n0 1\n0 2\n1 2\n2 3\n";
  Outcome r = run({"decompose", "--format", "edgelist", path});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_FALSE(r.out.empty());
  std::remove(path.c_str());
}

TEST(CliTest, SpectraJson) {
  Outcome r = run({"spectra", "--graph6", "Bw", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.dump().find("timing_ms"), std::string::npos);
}

TEST(CliTest, VerifyIsByteIdentical) {
  Outcome a = run({"verify", "--graph6", "ElCg", "--json"});
  Outcome b = run({"verify", "--graph6", "ElCg", "--json"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliTest, SweepWritesJsonFile) {
  const std::string path = temp_path("kepf_cli_sweep.json");
  Outcome r = run({"sweep", "--n", "4", "--exhaustive", "--json", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["graphs"], 64);
  std::remove(path.c_str());
}

TEST(CliTest, RandomSweepAndSearch) {
  EXPECT_EQ(run({"sweep", "--n", "6", "--random", "--samples", "50", "--seed", "3"}).code,
            kExitOk);
  Outcome s = run({"search", "--predicate", "unimodular-pf-full", "--n", "4",
               "--exhaustive"});
  EXPECT_EQ(s.code, kExitOk) << s.err;
  EXPECT_NE(s.out.find("Cx"), std::string::npos);
}

TEST(CliTest, GenFormats) {
  Outcome r = run({"gen", "--n", "3", "--exhaustive"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 8);
  Outcome e = run({"gen", "--n", "2", "--exhaustive", "--format", "edgelist"});
  EXPECT_EQ(e.code, kExitOk) << e.err;
  EXPECT_NE(e.out.find("0 1"), std::string::npos);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--graph6", "C"}).code, kExitUsage);
  EXPECT_EQ(run({"sweep", "--n", "9", "--exhaustive"}).code, kExitUsage);
  EXPECT_EQ(run({"search", "--n", "4", "--exhaustive"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "/nonexistent/graph.txt"}).code, kExitUsage);
}

}  // namespace
}  // namespace kepf::cli
