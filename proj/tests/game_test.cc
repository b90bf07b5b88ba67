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

#include "matchcore/game.h"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.h"
#include "gtest/gtest.h"
#include "matchcore/errors.h"

namespace matchcore {
namespace {

using ::matchcore::testing::Example2;
using ::matchcore::testing::Example4;
using ::matchcore::testing::Example5;
using ::matchcore::testing::Fig7;
using ::matchcore::testing::K3;
using ::matchcore::testing::MakeGame;

bool HasCode(const ValidationReport& report, const std::string& code) {
  return std::any_of(report.violations.begin(), report.violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

// Connectivity by repeated edge relaxation, independent of the bitmask code
// in the library.
bool InducesConnected(const GameInstance& g, const std::vector<std::string>& s) {
  std::set<std::string> members(s.begin(), s.end());
  std::set<std::string> reached = {s.front()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Edge& e : g.edges) {
      if (!members.contains(e.first) || !members.contains(e.second)) continue;
      if (reached.contains(e.first) != reached.contains(e.second)) {
        reached.insert(e.first);
        reached.insert(e.second);
        grew = true;
      }
    }
  }
  return reached.size() == members.size();
}

std::vector<Coalition> OracleCoalitions(const GameInstance& g, bool connected) {
  const auto ids = g.Vertices();
  std::vector<Coalition> out;
  for (unsigned mask = 1; mask < (1u << ids.size()); ++mask) {
    std::vector<std::string> s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (mask >> i & 1) s.push_back(ids[i]);
    }
    if (!connected || InducesConnected(g, s)) out.push_back(Coalition::Of(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(VariantTest, NamesRoundTrip) {
  for (Variant v : {Variant::kAssignment, Variant::kGeneralMatching,
                    Variant::kBUniform, Variant::kBUnconstrained,
                    Variant::kBConstrained, Variant::kBGeneral}) {
    EXPECT_EQ(ParseVariant(VariantName(v)), v);
  }
  EXPECT_FALSE(ParseVariant("matching").has_value());
}

TEST(GameTest, BundledGamesValidate) {
  for (const GameInstance& g :
       {Example2(), Example4(), Example5(), K3(),
        Fig7(Variant::kBUnconstrained), Fig7(Variant::kBConstrained)}) {
    EXPECT_TRUE(ValidateGame(g).ok());
  }
}

TEST(GameTest, RejectsNonPositiveWeight) {
  auto g = MakeGame(Variant::kAssignment, {"u"}, {"v"}, {{"u", "v", "0"}});
  EXPECT_TRUE(HasCode(ValidateGame(g), "non-positive weight"));
  g.edges[0].weight = Rational(-1);
  EXPECT_TRUE(HasCode(ValidateGame(g), "non-positive weight"));
}

TEST(GameTest, RejectsEdgeBoundOrder) {
  auto g = MakeGame(Variant::kBGeneral, {"u"}, {"v"}, {{"u", "v", "1"}},
                    {{"u", 3}, {"v", 3}});
  g.edges[0].lower = 2;
  g.edges[0].upper = 1;
  EXPECT_TRUE(HasCode(ValidateGame(g), "edge bound order"));
  g.edges[0].upper = 2;
  EXPECT_TRUE(ValidateGame(g).ok());
}

TEST(GameTest, RejectsStructuralErrors) {
  auto g = MakeGame(Variant::kAssignment, {"u1", "u2"}, {"v1"},
                    {{"u1", "v1", "1"}, {"u1", "u2", "1"}, {"u1", "x", "1"},
                     {"v1", "u1", "2"}});
  const auto report = ValidateGame(g);
  EXPECT_TRUE(HasCode(report, "edge not across bipartition"));
  EXPECT_TRUE(HasCode(report, "unknown endpoint"));
  EXPECT_TRUE(HasCode(report, "parallel edge"));

  auto loop = MakeGame(Variant::kGeneralMatching, {}, {"a"}, {{"a", "a", "1"}});
  EXPECT_TRUE(HasCode(ValidateGame(loop), "self-loop"));

  auto dup = MakeGame(Variant::kAssignment, {"a"}, {"a"}, {});
  EXPECT_TRUE(HasCode(ValidateGame(dup), "duplicate vertex"));
}

TEST(GameTest, RejectsBoundsOutsideTheirVariant) {
  auto g = Fig7(Variant::kBUniform);
  EXPECT_TRUE(HasCode(ValidateGame(g), "non-uniform vertex bound"));

  auto a = Example2();
  a.vertex_upper["u1"] = 2;
  EXPECT_TRUE(HasCode(ValidateGame(a), "vertex bound must be 1"));

  auto c = Fig7(Variant::kBConstrained);
  c.edges[0].upper = 2;
  EXPECT_TRUE(HasCode(ValidateGame(c), "constrained edge bound must be 1"));

  auto u = Fig7(Variant::kBUnconstrained);
  u.vertex_lower["u1"] = 1;
  EXPECT_TRUE(HasCode(ValidateGame(u), "vertex lower bound not allowed"));

  auto gen = Fig7(Variant::kBGeneral);
  gen.vertex_lower["u1"] = 3;
  EXPECT_TRUE(HasCode(ValidateGame(gen), "vertex bound order"));
}

TEST(GameTest, EdgeCapsPerVariant) {
  const Edge& heavy = Fig7(Variant::kBUnconstrained).edges[0];  // (u1,v1)
  EXPECT_EQ(Fig7(Variant::kBUnconstrained).EdgeCap(heavy), 2);
  EXPECT_EQ(Fig7(Variant::kBConstrained).EdgeCap(heavy), 1);
  auto gen = Fig7(Variant::kBGeneral);
  EXPECT_EQ(gen.EdgeCap(gen.edges[0]), 1);
  gen.edges[0].upper = 5;
  EXPECT_EQ(gen.EdgeCap(gen.edges[0]), 2);
  EXPECT_EQ(Example2().EdgeCap(Example2().edges[0]), 1);
}

TEST(CoalitionTest, LabelsAreSorted) {
  EXPECT_EQ(CoalitionLabel(Coalition::Of({"v2", "u1", "v2"})), "{u1,v2}");
  EXPECT_TRUE(Coalition::Of({"b", "a"}).Contains("a"));
}

TEST(CoalitionTest, Fig7PathHasTenConnectedCoalitions) {
  const auto g = Fig7(Variant::kBUnconstrained);
  const auto connected = ConnectedCoalitions(g);
  EXPECT_EQ(connected, OracleCoalitions(g, true));
  // The path v1 - u1 - v2 - u2 has 4 + 3 + 2 + 1 connected subpaths.
  EXPECT_EQ(connected.size(), 10u);
  EXPECT_EQ(AllCoalitions(g).size(), 15u);
}

TEST(CoalitionTest, MatchesOracleOnRandomGraphs) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = testing::RandomGeneral(rng, 7, {"1"}, 0.35);
    EXPECT_EQ(ConnectedCoalitions(g), OracleCoalitions(g, true));
    EXPECT_EQ(AllCoalitions(g), OracleCoalitions(g, false));
  }
}

TEST(CoalitionTest, CapIsEnforced) {
  GameInstance g;
  g.variant = Variant::kGeneralMatching;
  for (int i = 0; i < 17; ++i) g.right.push_back("v" + std::to_string(i));
  try {
    ConnectedCoalitions(g);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.cap(), 16);
    EXPECT_EQ(e.requested(), 17);
  }
  EXPECT_THROW(AllCoalitions(K3(), 2), CapExceeded);
}

TEST(CoalitionTest, InducedSubgameKeepsInternalEdges) {
  const auto sub = InduceSubgame(Example4(), Coalition::Of({"u1", "u2", "v1", "v2"}));
  EXPECT_EQ(sub.left, (std::vector<std::string>{"u1", "u2"}));
  EXPECT_EQ(sub.right, (std::vector<std::string>{"v1", "v2"}));
  ASSERT_EQ(sub.edges.size(), 2u);
  EXPECT_EQ(EdgeLabel(sub.edges[0]), "(u1,v1)");
  EXPECT_EQ(EdgeLabel(sub.edges[1]), "(u2,v2)");
  EXPECT_THROW(InduceSubgame(Example4(), Coalition::Of({"w"})), InputError);
}

TEST(GameIndexTest, ComponentsOfExample4) {
  const GameIndex index(Example4());
  const VertexMask all = (1u << index.ids.size()) - 1;
  const auto parts = Components(index, all);
  ASSERT_EQ(parts.size(), 2u);
  std::set<std::string> first;
  for (std::size_t i = 0; i < index.ids.size(); ++i) {
    if (parts[0] >> i & 1) first.insert(index.ids[i]);
  }
  EXPECT_EQ(first, (std::set<std::string>{"u1", "u4", "v1", "v3"}));
}

}  // namespace
}  // namespace matchcore
