// Copyright 2026 The matchcore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matchcore/commands.h"

#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "matchcore/errors.h"
#include "matchcore/game_io.h"

namespace matchcore {
namespace {

GameInstance Load(const std::string& name) {
  return ReadGameFile(std::filesystem::path(MATCHCORE_DATA_DIR) /
                      (name + ".game"));
}

CommandResult RunOn(const std::string& command, const std::string& game,
                  CommandOptions options = {}) {
  const GameInstance g = Load(game);
  return RunCommand(command, &g, options);
}

TEST(CommandsTest, PaymentsFollowTheUniqueImputation) {
  const auto r = RunOn("payments", "example5");
  EXPECT_EQ(r.exit_code, kExitOk);
  const auto& v = r.report["payments"]["vertices"];
  for (const char* id : {"v2", "v4", "v6", "v7"}) {
    EXPECT_TRUE(v[id]["paid_sometimes"].get<bool>()) << id;
    EXPECT_EQ(v[id]["max_profit"], "1") << id;
  }
  for (const char* id : {"v1", "v3", "v5"}) {
    EXPECT_FALSE(v[id]["paid_sometimes"].get<bool>()) << id;
  }
  EXPECT_EQ(r.report["payments"]["edges"]["(v4,v7)"]["max_slack"], "1");
}

TEST(CommandsTest, CheckAcceptsACoreImputation) {
  CommandOptions o;
  o.imputation = ParseVector("1,0,0,3");
  const auto r = RunOn("check", "fig7-constrained", o);
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_TRUE(r.report["check"]["verdict"]["in_core"].get<bool>());
}

TEST(CommandsTest, CheckReportsTheWitnessAsAFinding) {
  CommandOptions o;
  o.imputation = ParseVector("1,0,0,3");
  const auto r = RunOn("check", "fig7-unconstrained", o);
  EXPECT_EQ(r.exit_code, kExitFinding);
  EXPECT_EQ(r.report["check"]["verdict"]["witness"], "{u1,v1}");
  EXPECT_EQ(r.report["check"]["verdict"]["witness_worth"], "2");
}

TEST(CommandsTest, ConcurrencyOnK3ReportsAnEmptyCore) {
  const auto r = RunOn("concurrency", "k3");
  EXPECT_EQ(r.exit_code, kExitFinding);
  EXPECT_EQ(r.report["concurrency"]["summary"], "core empty: Q_i = 1, Q_f = 3/2");
  EXPECT_TRUE(r.report["concurrency"]["core_empty"].get<bool>());
}

TEST(CommandsTest, DualImageOfTheScaledDual) {
  CommandOptions o;
  o.imputation = ParseVector("2,0,0,2");
  EXPECT_EQ(RunOn("dual-image", "fig7-unconstrained", o).exit_code, kExitOk);
  o.imputation = ParseVector("3,0,0,1");
  const auto r = RunOn("dual-image", "fig7-unconstrained", o);
  EXPECT_EQ(r.exit_code, kExitFinding);
  EXPECT_TRUE(r.report["dual-image"]["verdict"]["in_core"].get<bool>());
}

TEST(CommandsTest, CapsAreEchoedAndEnforced) {
  CommandOptions o;
  o.caps.coalitions = 3;
  o.imputation = ParseVector("1,1,0,1/10,0");
  const auto r = RunOn("check", "example2", o);
  EXPECT_EQ(r.exit_code, kExitCapExceeded);
  EXPECT_EQ(r.report["cap"], 3);
  EXPECT_EQ(r.report["caps"]["coalitions"], 3);
  EXPECT_NE(r.report["error"].get<std::string>().find("cap 3"), std::string::npos);
}

TEST(CommandsTest, InputErrors) {
  EXPECT_EQ(RunOn("nonsense", "k3").exit_code, kExitInputError);
  EXPECT_EQ(RunOn("check", "k3").exit_code, kExitInputError);
  CommandOptions o;
  o.imputation = ParseVector("1,2");
  EXPECT_EQ(RunOn("check", "k3", o).exit_code, kExitInputError);
  EXPECT_EQ(RunOn("antipodal", "k3").exit_code, kExitInputError);
  EXPECT_EQ(RunCommand("worth", nullptr, {}).exit_code, kExitInputError);
  EXPECT_THROW(ParseVector("1,,2"), InputError);
}

TEST(CommandsTest, ParseVectorAcceptsDecimalsAndFractions) {
  const auto v = ParseVector("1, 1/2,0.25");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[2], Rational(1, 4));
}

TEST(CommandsTest, ImputationReportsNegativeEntries) {
  const auto r = RunOn("imputation", "forced-edge");
  EXPECT_EQ(r.exit_code, kExitFinding);
  EXPECT_EQ(r.report["imputation"]["negative_entries"][0], "v2");
}

TEST(CommandsTest, BundledExamplesMatchTheirPins) {
  const auto first = RunCommand("examples", nullptr, {});
  EXPECT_EQ(first.exit_code, kExitOk) << RenderJson(first.report);
  EXPECT_EQ(first.report["mismatches"], 0);
  EXPECT_EQ(first.report["instances"].size(), 11u);
  const auto second = RunCommand("examples", nullptr, {});
  EXPECT_EQ(RenderJson(first.report), RenderJson(second.report));
}

TEST(CommandsTest, ExamplesFailOnAMismatch) {
  const auto dir = std::filesystem::temp_directory_path() / "matchcore_pins";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  for (const char* ext : {".game", ".expected"}) {
    std::filesystem::copy_file(
        std::filesystem::path(MATCHCORE_DATA_DIR) / (std::string("k3") + ext),
        dir / (std::string("k3") + ext));
  }
  CommandOptions o;
  o.data_dir = dir;
  EXPECT_EQ(RunCommand("examples", nullptr, o).exit_code, kExitOk);
  std::ofstream(dir / "k3.expected", std::ios::app) << " ";
  const auto r = RunCommand("examples", nullptr, o);
  EXPECT_EQ(r.exit_code, kExitFinding);
  EXPECT_EQ(r.report["mismatches"], 1);
  std::filesystem::remove_all(dir);
}

TEST(CommandsTest, TableRowsAreAligned) {
  Report r;
  r["a"] = "1";
  r["longer"] = {{"x", true}};
  EXPECT_EQ(RenderTable(r), "a         1\nlonger.x  true\n");
}

TEST(CommandsTest, EveryCommandRunsOnEveryBundledInstance) {
  CommandOptions o;
  for (const auto& entry :
       std::filesystem::directory_iterator(MATCHCORE_DATA_DIR)) {
    if (entry.path().extension() != ".game") continue;
    const GameInstance g = ReadGameFile(entry.path());
    o.imputation.emplace(g.Vertices().size(), Rational());
    for (const auto& name : CommandNames()) {
      if (name == "examples") continue;
      const auto r = RunCommand(name, &g, o);
      EXPECT_LE(r.exit_code, kExitInputError) << name << " " << g.name;
      if (r.exit_code == kExitInputError) {
        EXPECT_TRUE(r.report.contains("error")) << name << " " << g.name;
      }
    }
  }
}

}  // namespace
}  // namespace matchcore
