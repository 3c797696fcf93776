// Copyright 2026 The robustflow Authors
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "robustflow/cli.h"
#include "robustflow/json_io.h"

namespace robustflow {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("robustflow_cli_" + std::string(::testing::UnitTest::GetInstance()
                                                ->current_test_info()
                                                ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  int Run(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return RunCli(args, out_, err_);
  }

  static std::string Read(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, GenerateSolveEvaluateRoundTrip) {
  ASSERT_EQ(Run({"generate", "fig1", "-o", Path("fig1.json")}), kExitOk) << err_.str();
  ASSERT_EQ(Run({"solve", "--instance", Path("fig1.json"), "--model", "gm", "--gamma", "1",
                 "-o", Path("gm.json")}),
            kExitOk)
      << err_.str();
  const Json result = ReadJsonFile(Path("gm.json"));
  EXPECT_EQ(result.at("objective"), 2);
  EXPECT_EQ(result.at("report").at("robust_value"), 2);

  ASSERT_EQ(Run({"evaluate", "--instance", Path("fig1.json"), "--flow", Path("gm.json"),
                 "--gamma", "1"}),
            kExitOk)
      << err_.str();
  const Json report = Json::parse(out_.str());
  EXPECT_EQ(report.at("robust_value"), 2);
  EXPECT_EQ(report.at("feasible"), true);
}

TEST_F(CliTest, SolveCsvHasHeaderAndRow) {
  ASSERT_EQ(Run({"generate", "fig1", "-o", Path("fig1.json")}), kExitOk);
  ASSERT_EQ(Run({"solve", "--instance", Path("fig1.json"), "--model", "am", "--gamma", "1",
                 "--format", "csv"}),
            kExitOk)
      << err_.str();
  const std::string csv = out_.str();
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "model,gamma,horizon,objective,nominal_value,robust_value,worst_scenarios,"
            "objective_approx");
  EXPECT_NE(csv.find("am,1,,4/3,"), std::string::npos) << csv;
}

TEST_F(CliTest, CompareWithoutTimingIsDeterministic) {
  ASSERT_EQ(Run({"generate", "ti-example", "-o", Path("ti.json")}), kExitOk);
  const std::vector<std::string> args = {"compare", "--instance", Path("ti.json"), "--models",
                                         "dpm,dam,dam-compact,dgm,tr", "--no-timing"};
  ASSERT_EQ(Run(args), kExitOk) << err_.str();
  const std::string first = out_.str();
  ASSERT_EQ(Run(args), kExitOk);
  EXPECT_EQ(first, out_.str());
  EXPECT_NE(first.find("\ntr,1,2,3/2,"), std::string::npos) << first;
}

TEST_F(CliTest, ManifestsAreDeterministic) {
  ASSERT_EQ(Run({"generate", "bottleneck", "--gamma", "1", "--beta", "2", "-o",
                 Path("b.json")}),
            kExitOk);
  const std::vector<std::string> args = {"solve", "--instance", Path("b.json"), "--model",
                                         "pm", "-o", Path("pm.json"), "--manifest",
                                         Path("m.json")};
  ASSERT_EQ(Run(args), kExitOk) << err_.str();
  const std::string first = Read(Path("m.json"));
  ASSERT_EQ(Run(args), kExitOk);
  EXPECT_EQ(first, Read(Path("m.json")));
  const Json manifest = Json::parse(first);
  EXPECT_EQ(manifest.at("command"), "solve");
  EXPECT_TRUE(manifest.contains("values"));
}

TEST_F(CliTest, InfeasibleFlowExitsOne) {
  ASSERT_EQ(Run({"generate", "fig1", "-o", Path("fig1.json")}), kExitOk);
  std::ofstream(Path("flow.json"))
      << R"({"kind": "arc", "entries": [{"arc": "a1", "value": 7}]})";
  EXPECT_EQ(Run({"evaluate", "--instance", Path("fig1.json"), "--flow", Path("flow.json"),
                 "--gamma", "1"}),
            kExitInfeasibleFlow);
}

TEST_F(CliTest, BadInputExitsTwo) {
  EXPECT_EQ(Run({"solve", "--instance", Path("missing.json"), "--model", "gm"}), kExitBadInput);
  ASSERT_EQ(Run({"generate", "fig1", "-o", Path("fig1.json")}), kExitOk);
  EXPECT_EQ(Run({"solve", "--instance", Path("fig1.json"), "--model", "xyz"}), kExitBadInput);
  EXPECT_EQ(Run({"generate", "partition", "--b", "1,2"}), kExitBadInput);
  EXPECT_EQ(Run({"generate", "por-static", "--gamma", "2", "--alpha", "3"}), kExitBadInput);
  EXPECT_EQ(Run({"no-such-command"}), kExitBadInput);
}

TEST_F(CliTest, GuardBreachExitsThree) {
  ASSERT_EQ(Run({"generate", "fig1", "-o", Path("fig1.json")}), kExitOk);
  setenv("ROBUSTFLOW_GUARD_PATHS", "2", 1);
  const int code = Run({"solve", "--instance", Path("fig1.json"), "--model", "gm",
                        "--gamma", "1"});
  unsetenv("ROBUSTFLOW_GUARD_PATHS");
  EXPECT_EQ(code, kExitGuard) << err_.str();
}

TEST_F(CliTest, FailingSuiteExitsFourWithCounterexample) {
  EXPECT_EQ(Run({"suite", "partition-roundtrip", "--sizes", "3", "--seeds", "0"}),
            kExitInvariant);
  EXPECT_NE(err_.str().find("minimized counterexample"), std::string::npos);
}

TEST_F(CliTest, PassingSuiteExitsZero) {
  EXPECT_EQ(Run({"suite", "embedding", "--seeds", "2"}), kExitOk) << err_.str();
}

}  // namespace
}  // namespace robustflow
