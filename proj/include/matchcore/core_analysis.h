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

#ifndef MATCHCORE_CORE_ANALYSIS_H_
#define MATCHCORE_CORE_ANALYSIS_H_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matchcore/game.h"
#include "matchcore/lp.h"
#include "matchcore/matching.h"
#include "matchcore/rational.h"

namespace matchcore {

// Profits in Vertices() order.
struct Imputation {
  std::vector<Rational> profits;

  friend bool operator==(const Imputation&, const Imputation&) = default;
};

struct Caps {
  int coalitions = kDefaultCoalitionCap;       // max vertices to enumerate
  int multiplicity = kDefaultMultiplicityCap;  // max b-matching budget
};

// Memoized coalition worths. A coalition whose induced graph is
// disconnected is worth the sum of its components. nullopt marks a
// coalition with no feasible b-matching (b-general lower bounds).
class WorthTable {
 public:
  explicit WorthTable(const GameInstance& game,
                      int multiplicity_cap = kDefaultMultiplicityCap);

  const GameInstance& game() const { return game_; }
  const GameIndex& index() const { return index_; }
  VertexMask MaskOf(const Coalition& coalition) const;  // InputError
  VertexMask GrandMask() const;
  std::optional<Rational> Of(VertexMask mask);

  // ConnectedCoalitions(game) with their masks, computed once.
  const std::vector<std::pair<Coalition, VertexMask>>& Connected(int cap);

 private:
  std::optional<Rational> Component(VertexMask mask);

  GameInstance game_;
  GameIndex index_;
  int cap_;
  std::map<VertexMask, std::optional<Rational>> memo_;
  std::optional<std::vector<std::pair<Coalition, VertexMask>>> connected_;
};

std::optional<Rational> Worth(const GameInstance& game,
                              const Coalition& coalition,
                              int cap = kDefaultMultiplicityCap);

// Identity map from an optimal dual of an assignment or general matching
// game. Throws InputError when y is infeasible or does not sum to the worth.
Imputation CoreImputationFromDual(const GameInstance& game,
                                  const DualSolution& y);

struct CoreVerdict {
  bool in_core = false;
  std::string reason;  // empty when in_core
  std::optional<Coalition> witness;
  Rational witness_worth;   // p(S) of the witness
  Rational witness_profit;  // profits summed over the witness
};

// Exact core test over the connected coalitions, in the lexicographic order
// of ConnectedCoalitions; the first violated coalition is the witness.
// Coalitions with no feasible b-matching impose no constraint.
CoreVerdict IsCoreImputation(const GameInstance& game, const Imputation& imp,
                             const Caps& caps = {});
CoreVerdict IsCoreImputation(WorthTable& worths, const Imputation& imp,
                             int coalition_cap = kDefaultCoalitionCap);

struct WorthReport {
  Rational q_integral;
  Rational q_fractional;
  bool concurrent = false;
};

WorthReport CheckConcurrency(const GameInstance& game, const Caps& caps = {});

// Answer to a universally or existentially quantified payment question.
// core_empty is set for non-concurrent general games, where the question is
// void and flag/extreme carry no meaning.
struct PaymentAnswer {
  bool core_empty = false;
  bool flag = false;
  Rational extreme;  // max profit, or max slack
};

PaymentAnswer PaidSometimes(const GameInstance& game, const std::string& vertex);
PaymentAnswer AlwaysFairlyPaid(const GameInstance& game, const std::string& a,
                               const std::string& b);

struct PaymentReport {
  bool core_empty = false;
  std::vector<PaymentAnswer> vertices;  // Vertices() order
  std::vector<PaymentAnswer> edges;     // game.edges order
};

// All payment questions of an assignment or general matching game, answered
// over one optimal dual face.
PaymentReport Payments(const GameInstance& game, const Caps& caps = {});

struct Antipodes {
  Imputation left_optimal;
  Imputation right_optimal;
};

// Core imputations maximizing the total profit of the left side and of the
// right side. Assignment games only.
Antipodes AntipodalImputations(const GameInstance& game);

struct MeetJoin {
  Imputation meet;  // min on the left, max on the right
  Imputation join;  // max on the left, min on the right
  bool meet_in_core = false;
  bool join_in_core = false;
};

// Bipartite games only. Throws InputError when p or q is not in the core.
MeetJoin ComputeMeetJoin(const GameInstance& game, const Imputation& p,
                         const Imputation& q, const Caps& caps = {});

struct DegeneracyReport {
  bool degenerate = false;
  std::size_t optimum_count = 0;
  std::vector<std::string> viable_vertices;
  std::vector<std::string> viable_edges;  // EdgeLabel form
  // Payment cross-tables; absent for b-matching games and empty cores.
  std::optional<std::vector<std::string>> never_paid_vertices;
  std::optional<std::vector<std::string>> always_fair_edges;
};

DegeneracyReport Degeneracy(const GameInstance& game, const Caps& caps = {});

}  // namespace matchcore

#endif  // MATCHCORE_CORE_ANALYSIS_H_
