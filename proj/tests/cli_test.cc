// Copyright 2026 The pdslab Authors
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

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.h"
#include "json.hpp"
#include "pdslab/catalog.h"
#include "pdslab/graph_io.h"
#include "pdslab/pds.h"
#include "test_support.h"

namespace pdslab {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome RunTool(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "pdslab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::Run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("pdslab_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
    Write("c5.txt", catalog::Cycle(5));
    Write("k4.txt", catalog::Complete(4));
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  void Write(const std::string& name, const Graph& g) {
    std::ofstream f(dir_ / name);
    WriteGraph(f, g);
  }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, SolveC5) {
  const Outcome r = RunTool({"--json", "solve", "--in", Path("c5.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["size"], 3);
  EXPECT_EQ(j["result"]["method"], "h2");
  EXPECT_EQ(j["result"]["verified"], true);
  EXPECT_EQ(j["input"]["n"], 5);
}

TEST_F(CliTest, SolveReadsStdin) {
  const Outcome r = RunTool({"--json", "solve", "--method", "brute", "--connected"},
                            "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["result"]["size"], 3);
}

TEST_F(CliTest, ReportIsDeterministicWithoutTiming) {
  const Outcome a = RunTool({"--json", "solve", "--in", Path("c5.txt")});
  const Outcome b = RunTool({"--json", "solve", "--in", Path("c5.txt")});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find("elapsed"), std::string::npos);
  const Outcome t = RunTool({"--json", "--timing", "solve", "--in", Path("c5.txt")});
  EXPECT_NE(t.out.find("elapsed_ms"), std::string::npos);
}

TEST_F(CliTest, Verify) {
  Outcome r = RunTool({"--json", "verify", "--in", Path("c5.txt"), "--set", "0,1,2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["result"]["verified"], true);
  r = RunTool({"--json", "verify", "--in", Path("c5.txt"), "--set", "0,1,2,3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["verified"], false);
  EXPECT_EQ(j["result"]["violation"]["vertex"], 0);
  EXPECT_EQ(RunTool({"verify", "--in", Path("c5.txt"), "--set", "0,9"}).code, 1);
  EXPECT_EQ(RunTool({"verify", "--in", Path("c5.txt"), "--set", "a"}).code, 1);
}

TEST_F(CliTest, ReduceDenseDelta6) {
  const std::string out = Path("gadget.txt");
  const Outcome r = RunTool({"--json", "reduce", "--gadget", "dense-delta6", "-k", "1",
                             "--in", Path("k4.txt"), "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["vertices"], 10);
  EXPECT_EQ(j["result"]["k_prime"], 7);
  EXPECT_TRUE(j["result"]["audit"].empty());
  const Graph gadget = ReadGraphFile(out);
  EXPECT_EQ(gadget.num_vertices(), 10);
  std::ifstream f(out);
  std::string first;
  std::getline(f, first);
  EXPECT_NE(first.find("k_prime 7"), std::string::npos);
}

TEST_F(CliTest, Params) {
  const Outcome r = RunTool({"--json", "params", "--in", Path("k4.txt")});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["degeneracy"], 3);
  EXPECT_EQ(j["result"]["complement"]["max_degree"], 0);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(RunTool({}).code, 2);
  EXPECT_EQ(RunTool({"solve", "--method", "magic"}).code, 2);
  EXPECT_EQ(RunTool({"reduce", "--gadget", "sparse"}).code, 2);
  EXPECT_EQ(RunTool({"--help"}).code, 0);
  const Outcome parse = RunTool({"params"}, "3 1\n0 x\n");
  EXPECT_EQ(parse.code, 1);
  EXPECT_NE(parse.err.find("line 2, column 3"), std::string::npos);
  EXPECT_EQ(RunTool({"params", "--in", Path("missing.txt")}).code, 1);
  EXPECT_EQ(RunTool({"reduce", "--gadget", "sparse", "-k", "3", "--in", Path("c5.txt")}).code,
            1);
}

TEST_F(CliTest, NoPolynomialCase) {
  Write("petersen.txt", catalog::Petersen());
  const Outcome r =
      RunTool({"--oracle-cap", "9", "solve", "--in", Path("petersen.txt")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("no polynomial case applies"), std::string::npos);
}

TEST_F(CliTest, OracleCapFromEnvironment) {
  Write("petersen.txt", catalog::Petersen());
  ::setenv("PDSLAB_ORACLE_CAP", "9", 1);
  const Outcome r = RunTool({"solve", "--in", Path("petersen.txt")});
  ::unsetenv("PDSLAB_ORACLE_CAP");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(RunTool({"solve", "--in", Path("petersen.txt")}).code, 0);
}

TEST_F(CliTest, SelftestQuickPasses) {
  const Outcome r = RunTool({"--json", "selftest"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(nlohmann::json::parse(r.out)["result"]["failed"], 0);
}

TEST_F(CliTest, SelftestCatchesLiteralTargetMutation) {
  const Outcome r = RunTool({"--json", "selftest", "--mutate", "literal-target"});
  EXPECT_NE(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_GT(j["result"]["failed"], 0);
  EXPECT_TRUE(j["result"].contains("first_counterexample"));
}

}  // namespace
}  // namespace pdslab
