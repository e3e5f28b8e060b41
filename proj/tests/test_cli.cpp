// Copyright 2026 The degstab Authors.
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
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(DEGSTAB_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

TEST(Cli, CountPrintsK1CountFirst) {
  const CliRun r = run("count --r 3 --n 7");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "34355647824");
}

TEST(Cli, CountCsv) {
  const CliRun r = run("count --r 3 --n 7 --csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "r,n,j,count\n3,7,0,34355647824\n3,7,1,4078732\n3,7,2,0\n3,7,3,11811\n");
}

TEST(Cli, CountJson) {
  const CliRun r = run("count --r 4 --n 8 --json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["with_drop_count"], "8761037088127");
}

TEST(Cli, AnalyzeJsonProfile) {
  const CliRun r = run("analyze --n 8 --anf \"123+456\" --max-codim 3 --json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  std::vector<std::uint64_t> tuple;
  for (const auto& e : j["profile"]) {
    tuple.push_back(e["count"]);
    if (e["codim"] != 1) tuple.push_back(e["new"]);
  }
  EXPECT_EQ(tuple, (std::vector<std::uint64_t>{0, 49, 49, 3059, 168}));
  EXPECT_EQ(j["degree"], 3);
  EXPECT_EQ(j["n"], 8);
  EXPECT_EQ(j["deg_stab"], 1);
  EXPECT_EQ(j["dd_hyperplane_space_dim"], 0);
  EXPECT_EQ(j["consistent"], true);
}

TEST(Cli, AnalyzeFromFileMatchesInline) {
  const std::string path = ::testing::TempDir() + "degstab_cli_anf.txt";
  std::ofstream(path) << "x1*x2*x3 + x4*x5*x6\n";
  const CliRun a = run("analyze --n 8 --anf-file " + path + " --csv");
  const CliRun b = run("analyze --n 8 --anf 123+456 --csv");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ConstructReport) {
  const CliRun r = run("construct --n 10 --r 3 --seed 1");
  EXPECT_EQ(r.code, 0);
  const auto nl = r.out.find('\n');
  ASSERT_NE(nl, std::string::npos);
  EXPECT_EQ(first_line(r.out.substr(nl + 1)), "theorem5: PASS, exhaustive-hyperplane-scan: PASS");
}

TEST(Cli, ConstructOtherMethods) {
  EXPECT_EQ(run("construct --n 10 --r 7 --method circular --k 1").code, 0);
  EXPECT_EQ(run("construct --n 8 --r 2 --method direct-sum").code, 0);
}

TEST(Cli, OutputIsDeterministicAcrossThreadCounts) {
  const CliRun a = run("analyze --n 8 --anf 123+245+346 --json --threads 1");
  const CliRun b = run("analyze --n 8 --anf 123+245+346 --json --threads 3");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run("construct --n 11 --r 4 --seed 5 --extend-prob 0.2 --json").out,
            run("construct --n 11 --r 4 --seed 5 --extend-prob 0.2 --json").out);
  EXPECT_EQ(run("enumerate-dd --n 7 --anf 123+145 --k 2 --threads 1").out,
            run("enumerate-dd --n 7 --anf 123+145 --k 2 --threads 0").out);
}

TEST(Cli, EnumerateHyperplanesOfMonomial) {
  const CliRun r = run("enumerate-dd --n 3 --anf 123 --k 1 --json");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["count"], 7);
}

TEST(Cli, Symmetric) {
  const CliRun r = run("symmetric --n 8 --r 3 --json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["hyperplane_count"], 1);
  EXPECT_EQ(j["enumeration_agrees"], true);
  const std::string path = ::testing::TempDir() + "degstab_cli_sym.txt";
  std::ofstream(path) << "123+124+134+234+12+13+14+23+24+34\n";
  EXPECT_EQ(run("symmetric --n 4 --full-anf " + path).code, 0);
}

TEST(Cli, CatalogMismatchExitsOne) {
  const CliRun r = run("catalog --table deg5 --csv");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("f27c,0,99,155,0"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("count --r 3").code, 2);
  EXPECT_EQ(run("analyze --n 8 --anf 1239").code, 2);
  EXPECT_EQ(run("analyze --n 8").code, 2);
  EXPECT_EQ(run("analyze --n 8 --anf 0").code, 2);
  EXPECT_EQ(run("construct --n 10 --r 7").code, 2);
  EXPECT_EQ(run("construct --n 10 --r 3 --method magic").code, 2);
  EXPECT_EQ(run("catalog --table deg4").code, 2);
  EXPECT_EQ(run("count --r 3 --n 7 --json --csv").code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run("--help").code, 0); }

}  // namespace
