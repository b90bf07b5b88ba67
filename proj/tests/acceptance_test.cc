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

// Acceptance checks, one line per criterion:
//   acceptance_test            runs criteria 1..12
//   acceptance_test 3 8        runs the listed criteria
// Exits nonzero when any selected criterion fails.

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.h"
#include "matchcore/bmatching.h"
#include "matchcore/commands.h"
#include "matchcore/core_analysis.h"
#include "matchcore/game_io.h"
#include "matchcore/lp.h"
#include "matchcore/matching.h"
#include "properties.h"

namespace matchcore {
namespace {

using testing::Vec;

// Collects every failed check of one criterion.
class Checks {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void Note(const std::string& what) { notes_.push_back(what); }
  bool ok() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string Show(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].ToString();
  }
  return out + ")";
}

GameInstance Load(const std::string& name) {
  return ReadGameFile(std::filesystem::path(MATCHCORE_DATA_DIR) /
                      (name + ".game"));
}

// The unique point of the optimal face of the game's dual LP, restricted to
// the first `count` variables, or nothing when some coordinate varies.
std::optional<std::vector<Rational>> UniqueFacePoint(const GameInstance& g,
                                                     std::size_t count) {
  const LinearProgram lp = BuildDualLp(g);
  const OptimalFace face(lp);
  if (!face.base().optimal()) return std::nullopt;
  std::vector<Rational> point;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Rational> objective(lp.num_variables());
    objective[k] = 1;
    const Rational hi = face.Optimize(objective, Sense::kMaximize).objective_value;
    const Rational lo = face.Optimize(objective, Sense::kMinimize).objective_value;
    if (hi != lo) return std::nullopt;
    point.push_back(hi);
  }
  return point;
}

std::size_t VertexCount(const GameInstance& g) { return g.Vertices().size(); }

Rational WorthOf(const GameInstance& g) {
  return BruteForceOptima(g).max_weight;
}

void Criterion1(Checks& c) {
  const GameInstance g = Load("example2");
  const Optima optima = BruteForceOptima(g);
  c.Expect(optima.max_weight == Rational(21, 10),
           "worth " + optima.max_weight.ToString() + ", want 21/10");
  c.Expect(optima.matchings.size() == 2,
           "optimal matchings " + std::to_string(optima.matchings.size()) + ", want 2");
  const auto point = UniqueFacePoint(g, VertexCount(g));
  const auto want = Vec({"1", "1", "0", "1/10", "0"});
  c.Expect(point.has_value(), "core imputation is not unique");
  if (point) c.Expect(*point == want, "core imputation " + Show(*point));
}

void Criterion2(Checks& c) {
  const Antipodes a = AntipodalImputations(Load("example3"));
  const auto left = Vec({"1/10", "1/10", "0", "9/10", "9/10"});
  const auto right = Vec({"0", "0", "0", "1", "1"});
  c.Expect(a.left_optimal.profits == left,
           "left-optimal " + Show(a.left_optimal.profits) + ", want " + Show(left));
  c.Expect(a.right_optimal.profits == right,
           "right-optimal " + Show(a.right_optimal.profits) + ", want " + Show(right));
}

void Criterion3(Checks& c) {
  const GameInstance g = Load("example4");
  c.Expect(WorthOf(g) == Rational(202), "worth " + WorthOf(g).ToString());
  const auto top = Worth(g, Coalition::Of({"u1", "u2", "v1", "v2"}));
  c.Expect(top && *top == Rational(200), "top-coalition worth is not 200");
  const Antipodes a = AntipodalImputations(g);
  const auto left = Vec({"51", "51", "0", "0", "50", "50", "0", "0"});
  const auto right = Vec({"50", "50", "0", "0", "50", "50", "1", "1"});
  c.Expect(a.left_optimal.profits == left,
           "left-optimal " + Show(a.left_optimal.profits) + ", stated " + Show(left));
  c.Expect(a.right_optimal.profits == right,
           "right-optimal " + Show(a.right_optimal.profits) + ", stated " + Show(right));
  if (a.left_optimal.profits != left) {
    const auto stated = IsCoreImputation(g, Imputation{left});
    Rational stated_sum, found_sum;
    for (int i = 0; i < 4; ++i) {
      stated_sum += left[i];
      found_sum += a.left_optimal.profits[i];
    }
    c.Note("stated left-optimal point in core: " +
           std::string(stated.in_core ? "yes" : "no") + ", left total " +
           stated_sum.ToString() + " vs " + found_sum.ToString() + " found");
  }
}

void Criterion4(Checks& c) {
  const GameInstance g = Load("example5");
  const WorthReport w = CheckConcurrency(g);
  c.Expect(w.q_integral == Rational(4) && w.q_fractional == Rational(4),
           "Q_i " + w.q_integral.ToString() + ", Q_f " + w.q_fractional.ToString());
  const Optima optima = BruteForceOptima(g);
  c.Expect(optima.matchings.size() == 3,
           "optimal matchings " + std::to_string(optima.matchings.size()));
  const int heavy = GameIndex(g).EdgeOf("v2", "v7");
  for (const auto& m : optima.matchings) {
    c.Expect(m.multiplicity[heavy] == Rational(1), "an optimum misses (v2,v7)");
  }
  const auto point = UniqueFacePoint(g, VertexCount(g));
  const auto want = Vec({"0", "1", "0", "1", "0", "1", "1"});
  c.Expect(point.has_value(), "core imputation is not unique");
  if (point) c.Expect(*point == want, "core imputation " + Show(*point));
  const auto slack = [&](const char* a, const char* b) {
    return AlwaysFairlyPaid(g, a, b).extreme;
  };
  c.Expect(slack("v4", "v7") == Rational(1),
           "(v4,v7) max slack " + slack("v4", "v7").ToString());
  for (const auto& [a, b] : {std::pair{"v1", "v2"}, {"v2", "v3"}, {"v1", "v7"}}) {
    c.Expect(slack(a, b).IsZero(), std::string("slack on (") + a + "," + b + ")");
  }
}

void Criterion5(Checks& c) {
  const GameInstance g = Load("example6");
  const WorthReport w = CheckConcurrency(g);
  c.Expect(w.q_integral == Rational(2) && w.q_fractional == Rational(2),
           "Q_i " + w.q_integral.ToString() + ", Q_f " + w.q_fractional.ToString());
  const auto point = UniqueFacePoint(g, VertexCount(g));
  c.Expect(point.has_value(), "core imputation is not unique");
  if (point) {
    c.Expect(*point == Vec({"1", "1/2", "1/2", "0"}), "core imputation " + Show(*point));
  }
  c.Expect(ClassifyVertex(g, "v4") == Label::kEssential, "v4 is not essential");
  const PaymentAnswer paid = PaidSometimes(g, "v4");
  c.Expect(!paid.core_empty && !paid.flag, "v4 is paid in some core imputation");
}

void Criterion6(Checks& c) {
  const GameInstance g = Load("k3");
  const WorthReport w = CheckConcurrency(g);
  c.Expect(w.q_integral == Rational(1), "Q_i " + w.q_integral.ToString());
  c.Expect(w.q_fractional == Rational(3, 2), "Q_f " + w.q_fractional.ToString());
  c.Expect(Payments(g).core_empty, "core not declared empty");
  c.Expect(SampleSystemVertices(BuildCoalitionSystem(g), 1, 5).empty(),
           "coalition system is feasible");
  const HalfIntegralReport half = CheckHalfIntegral(g, FractionalOptimum(g));
  c.Expect(half.is_half_integral, "not half-integral: " + half.failure);
  c.Expect(half.half_cycles.size() == 1 && half.half_cycles[0].size() == 3,
           "expected one 3-cycle");
}

void Criterion7(Checks& c) {
  const GameInstance g = Load("fig7-unconstrained");
  c.Expect(WorthOf(g) == Rational(4), "worth " + WorthOf(g).ToString());
  const auto dual = UniqueFacePoint(g, VertexCount(g));
  c.Expect(dual.has_value(), "optimal dual is not unique");
  if (dual) c.Expect(*dual == Vec({"1", "0", "0", "2"}), "optimal dual " + Show(*dual));
  const DerivedImputation d = UnconImputationFromDual(g, SolveDual(g));
  c.Expect(d.imputation.profits == Vec({"2", "0", "0", "2"}),
           "dual-derived imputation " + Show(d.imputation.profits));
  const Imputation p{Vec({"3", "0", "0", "1"})};
  c.Expect(IsCoreImputation(g, p).in_core, "(3,0,0,1) not in core");
  c.Expect(!InDualImageUncon(g, p), "(3,0,0,1) in dual image");
  const CoreVerdict q = IsCoreImputation(g, Imputation{Vec({"1", "0", "0", "3"})});
  c.Expect(!q.in_core, "(1,0,0,3) in core");
  c.Expect(q.witness && CoalitionLabel(*q.witness) == "{u1,v1}",
           "witness " + (q.witness ? CoalitionLabel(*q.witness) : std::string("none")));
}

void Criterion8(Checks& c) {
  const GameInstance g = Load("fig7-constrained");
  for (const char* b : {"0", "1/2", "1"}) {
    const Rational x = Rational::Parse(b);
    const Imputation p{{Rational(3) - x, 0, 0, Rational(1) + x}};
    c.Expect(IsCoreImputation(g, p).in_core, "family point b=" + std::string(b) + " not in core");
    c.Expect(InDualImageCon(g, p), "family point b=" + std::string(b) + " not in dual image");
  }
  for (const auto& v : {Vec({"1", "0", "0", "3"}), Vec({"0", "0", "1", "3"})}) {
    const Imputation p{v};
    c.Expect(IsCoreImputation(g, p).in_core, Show(v) + " not in core");
    c.Expect(!InDualImageCon(g, p), Show(v) + " is in the dual image");
  }
  for (const char* a : {"0", "1"}) {
    const Rational t = Rational::Parse(a);
    DualSolution y;
    y.vertex_upper = {1, 0, 0, Rational(2) - t};
    y.edge_upper = {0, t, 0};
    y.vertex_lower = {0, 0, 0, 0};
    y.edge_lower = {0, 0, 0};
    c.Expect(IsOptimalDual(g, y), "dual a=" + std::string(a) + " not optimal");
    bool reached = false;
    for (const auto& s : {SplitScheme::AllLeft(y), SplitScheme::AllRight(y),
                          SplitScheme::Balanced(y)}) {
      reached |= ConImputationFromDual(g, y, s).imputation.profits ==
                 Vec({"2", "0", "0", "2"});
    }
    c.Expect(reached, "dual a=" + std::string(a) + " does not reach (2,0,0,2)");
  }
}

void Report(Checks& c, const char* label, const testing::Tally& t) {
  c.Note(std::string(label) + ": " + std::to_string(t.instances) + " instances, " +
         std::to_string(t.checks) + " checks, " +
         std::to_string(t.failures.size()) + (t.failures.size() == 20 ? "+" : "") +
         " failures");
  for (const auto& [kind, count] : t.kinds) {
    c.Note(std::string(label) + ": " + std::to_string(count) + " x " + kind);
  }
  for (std::size_t k = 0; k < t.failures.size() && k < 3; ++k) {
    c.Expect(false, std::string(label) + ": " + t.failures[k]);
  }
  c.Expect(t.ok(), std::string(label) + " suite failed");
}

void Criterion9(Checks& c) {
  Report(c, "assignment", testing::AssignmentSuite(200, 9001));
}

void Criterion10(Checks& c) {
  int concurrent = 0;
  const auto t = testing::GeneralSuite(200, 10001, &concurrent);
  Report(c, "general", t);
  c.Note("concurrent instances: " + std::to_string(concurrent));
  c.Expect(concurrent >= 200, "fewer than 200 concurrent instances");
}

void Criterion11(Checks& c) {
  Report(c, "b-uniform", testing::BVariantSuite(Variant::kBUniform, 100, 11001));
  Report(c, "b-unconstrained",
         testing::BVariantSuite(Variant::kBUnconstrained, 100, 11002));
  Report(c, "b-constrained", testing::BVariantSuite(Variant::kBConstrained, 100, 11003));
  Report(c, "b-general", testing::BVariantSuite(Variant::kBGeneral, 100, 11004));
  // Informational: the same variant with every lower bound at zero.
  const auto plain = testing::BVariantSuite(Variant::kBGeneral, 100, 11005, false);
  c.Note("b-general without lower bounds: " + std::to_string(plain.instances) +
         " instances, " + std::to_string(plain.failures.size()) + " failures");
}

void Criterion12(Checks& c) {
  const auto first = RunCommand("examples", nullptr, {});
  const auto second = RunCommand("examples", nullptr, {});
  c.Expect(RenderJson(first.report) == RenderJson(second.report),
           "two runs differ");
  c.Expect(first.report.value("mismatches", -1) == 0,
           "pinned reports from an earlier run differ");
  c.Note(std::to_string(first.report["instances"].size()) + " instances");
}

struct Criterion {
  int number;
  const char* title;
  std::function<void(Checks&)> run;
};

const std::vector<Criterion>& AllCriteria() {
  static const auto* all = new std::vector<Criterion>{
      {1, "example2: worth, optima, unique core imputation", Criterion1},
      {2, "example3: antipodal imputations", Criterion2},
      {3, "example4: worth, top coalition, antipodal imputations", Criterion3},
      {4, "example5: concurrency, optima, unique imputation, slacks", Criterion4},
      {5, "example6: unique imputation, essential but never paid v4", Criterion5},
      {6, "k3: Q_i, Q_f, empty core, half-integral 3-cycle", Criterion6},
      {7, "fig7-unconstrained: dual, image, core witness", Criterion7},
      {8, "fig7-constrained: imputation family and dual image", Criterion8},
      {9, "assignment property suite", Criterion9},
      {10, "general-matching property suite", Criterion10},
      {11, "b-variant property suites", Criterion11},
      {12, "deterministic examples reports", Criterion12},
  };
  return *all;
}

}  // namespace
}  // namespace matchcore

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  int failed = 0;
  for (const auto& criterion : matchcore::AllCriteria()) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), criterion.number) ==
            selected.end()) {
      continue;
    }
    matchcore::Checks checks;
    try {
      criterion.run(checks);
    } catch (const std::exception& e) {
      checks.Expect(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << criterion.number << ": "
              << (checks.ok() ? "PASS" : "FAIL") << "  " << criterion.title
              << "\n";
    for (const auto& n : checks.notes()) std::cout << "    note: " << n << "\n";
    for (const auto& f : checks.failures()) std::cout << "    fail: " << f << "\n";
    if (!checks.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
