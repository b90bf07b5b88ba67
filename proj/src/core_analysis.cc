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

#include "matchcore/core_analysis.h"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "matchcore/errors.h"

namespace matchcore {
namespace {

void RequireUnitGame(const GameInstance& game, const char* what) {
  if (game.variant != Variant::kAssignment &&
      game.variant != Variant::kGeneralMatching) {
    throw InputError(std::string(what) +
                     " needs an assignment or general-matching game");
  }
}

Rational SumOver(const std::vector<Rational>& profits, VertexMask mask) {
  Rational sum;
  for (std::size_t i = 0; i < profits.size(); ++i) {
    if (mask >> i & 1) sum += profits[i];
  }
  return sum;
}

Imputation VertexPart(const GameInstance& game, const LPSolution& s) {
  return Imputation{DualFromValues(game, s.values).vertex_upper};
}

// Optimal dual face of a unit game together with the variable positions
// of its vertices.
class UnitFace {
 public:
  explicit UnitFace(const GameInstance& game)
      : lp_(BuildDualLp(game)), face_(lp_) {}

  Rational Max(const std::vector<int>& vertices) const {
    std::vector<Rational> objective(lp_.num_variables());
    for (int v : vertices) objective[v] += 1;
    return face_.Optimize(objective, Sense::kMaximize).objective_value;
  }

  LPSolution Argmax(const std::vector<int>& vertices) const {
    std::vector<Rational> objective(lp_.num_variables());
    for (int v : vertices) objective[v] += 1;
    return face_.Optimize(objective, Sense::kMaximize);
  }

 private:
  LinearProgram lp_;
  OptimalFace face_;
};

bool CoreIsEmpty(const GameInstance& game, const Caps& caps) {
  return game.variant == Variant::kGeneralMatching &&
         !CheckConcurrency(game, caps).concurrent;
}

}  // namespace

WorthTable::WorthTable(const GameInstance& game, int multiplicity_cap)
    : game_(game), index_(game), cap_(multiplicity_cap) {
  if (index_.ids.size() > 8 * sizeof(VertexMask)) {
    throw CapExceeded("coalition enumeration", 8 * sizeof(VertexMask),
                      static_cast<int>(index_.ids.size()));
  }
}

VertexMask WorthTable::MaskOf(const Coalition& coalition) const {
  VertexMask mask = 0;
  for (const auto& id : coalition.members) {
    const int v = index_.VertexOf(id);
    if (v < 0) throw InputError("unknown vertex " + id);
    mask |= VertexMask{1} << v;
  }
  return mask;
}

VertexMask WorthTable::GrandMask() const {
  const auto n = index_.ids.size();
  return n == 8 * sizeof(VertexMask) ? ~VertexMask{0}
                                     : (VertexMask{1} << n) - 1;
}

std::optional<Rational> WorthTable::Component(VertexMask mask) {
  if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
  const Optima optima = BruteForceOptima(index_, mask, cap_);
  std::optional<Rational> value;
  if (optima.feasible) value = optima.max_weight;
  memo_.emplace(mask, value);
  return value;
}

std::optional<Rational> WorthTable::Of(VertexMask mask) {
  if (mask == 0) return Rational();
  Rational total;
  for (VertexMask part : Components(index_, mask)) {
    const auto w = Component(part);
    if (!w) return std::nullopt;
    total += *w;
  }
  return total;
}

const std::vector<std::pair<Coalition, VertexMask>>& WorthTable::Connected(
    int cap) {
  if (!connected_) {
    connected_.emplace();
    for (Coalition& c : ConnectedCoalitions(game_, cap)) {
      const VertexMask mask = MaskOf(c);
      connected_->emplace_back(std::move(c), mask);
    }
  }
  return *connected_;
}

std::optional<Rational> Worth(const GameInstance& game,
                              const Coalition& coalition, int cap) {
  WorthTable table(game, cap);
  return table.Of(table.MaskOf(coalition));
}

Imputation CoreImputationFromDual(const GameInstance& game,
                                  const DualSolution& y) {
  RequireUnitGame(game, "core imputation from dual");
  const GameIndex index(game);
  if (y.vertex_upper.size() != index.ids.size()) {
    throw InputError("dual has the wrong number of vertex entries");
  }
  for (const Rational& value : y.vertex_upper) {
    if (value.Sign() < 0) throw InputError("dual is not feasible");
  }
  for (std::size_t e = 0; e < index.endpoints.size(); ++e) {
    const auto [a, b] = index.endpoints[e];
    if (y.vertex_upper[a] + y.vertex_upper[b] < index.weight[e]) {
      throw InputError("dual is not feasible");
    }
  }
  Rational sum;
  for (const Rational& value : y.vertex_upper) sum += value;
  if (sum != BruteForceOptima(game).max_weight) {
    throw InputError("dual is not optimal: sum " + sum.ToString() +
                     " differs from the worth");
  }
  return Imputation{y.vertex_upper};
}

CoreVerdict IsCoreImputation(WorthTable& worths, const Imputation& imp,
                             int coalition_cap) {
  const GameIndex& index = worths.index();
  const auto& ids = index.ids;
  if (imp.profits.size() != ids.size()) {
    throw InputError("imputation has " + std::to_string(imp.profits.size()) +
                     " entries, game has " + std::to_string(ids.size()) +
                     " vertices");
  }
  CoreVerdict verdict;
  const auto grand = worths.Of(worths.GrandMask());
  if (!grand) {
    verdict.reason = "game has no feasible b-matching";
    return verdict;
  }
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (imp.profits[i].Sign() < 0) {
      verdict.reason = "negative profit";
      verdict.witness = Coalition{{ids[i]}};
      verdict.witness_worth = worths.Of(VertexMask{1} << i).value_or(Rational());
      verdict.witness_profit = imp.profits[i];
      return verdict;
    }
  }
  const Rational total = SumOver(imp.profits, worths.GrandMask());
  if (total != *grand) {
    verdict.reason = "profits do not sum to the worth";
    verdict.witness = Coalition::Of(ids);
    verdict.witness_worth = *grand;
    verdict.witness_profit = total;
    return verdict;
  }
  for (const auto& [coalition, mask] : worths.Connected(coalition_cap)) {
    const auto w = worths.Of(mask);
    if (!w) continue;
    const Rational profit = SumOver(imp.profits, mask);
    if (profit < *w) {
      verdict.reason = "coalition worth exceeds its profit";
      verdict.witness = coalition;
      verdict.witness_worth = *w;
      verdict.witness_profit = profit;
      return verdict;
    }
  }
  verdict.in_core = true;
  return verdict;
}

CoreVerdict IsCoreImputation(const GameInstance& game, const Imputation& imp,
                             const Caps& caps) {
  WorthTable worths(game, caps.multiplicity);
  return IsCoreImputation(worths, imp, caps.coalitions);
}

WorthReport CheckConcurrency(const GameInstance& game, const Caps& caps) {
  WorthReport report;
  const Optima optima = BruteForceOptima(game, caps.multiplicity);
  if (!optima.feasible) throw InputError("game has no feasible b-matching");
  report.q_integral = optima.max_weight;
  report.q_fractional = FractionalOptimum(game).weight;
  report.concurrent = report.q_integral == report.q_fractional;
  return report;
}

PaymentAnswer PaidSometimes(const GameInstance& game,
                            const std::string& vertex) {
  RequireUnitGame(game, "payment analysis");
  const GameIndex index(game);
  const int v = index.VertexOf(vertex);
  if (v < 0) throw InputError("unknown vertex " + vertex);
  PaymentAnswer answer;
  if (CoreIsEmpty(game, {})) {
    answer.core_empty = true;
    return answer;
  }
  answer.extreme = UnitFace(game).Max({v});
  answer.flag = answer.extreme.Sign() > 0;
  return answer;
}

PaymentAnswer AlwaysFairlyPaid(const GameInstance& game, const std::string& a,
                               const std::string& b) {
  RequireUnitGame(game, "payment analysis");
  const GameIndex index(game);
  const int e = index.EdgeOf(a, b);
  if (e < 0) throw InputError("unknown edge (" + a + "," + b + ")");
  PaymentAnswer answer;
  if (CoreIsEmpty(game, {})) {
    answer.core_empty = true;
    return answer;
  }
  const auto [x, y] = index.endpoints[e];
  answer.extreme = UnitFace(game).Max({x, y}) - index.weight[e];
  answer.flag = answer.extreme.IsZero();
  return answer;
}

PaymentReport Payments(const GameInstance& game, const Caps& caps) {
  RequireUnitGame(game, "payment analysis");
  PaymentReport report;
  if (CoreIsEmpty(game, caps)) {
    report.core_empty = true;
    return report;
  }
  const GameIndex index(game);
  const UnitFace face(game);
  for (std::size_t v = 0; v < index.ids.size(); ++v) {
    PaymentAnswer answer;
    answer.extreme = face.Max({static_cast<int>(v)});
    answer.flag = answer.extreme.Sign() > 0;
    report.vertices.push_back(answer);
  }
  for (std::size_t e = 0; e < index.endpoints.size(); ++e) {
    const auto [x, y] = index.endpoints[e];
    PaymentAnswer answer;
    answer.extreme = face.Max({x, y}) - index.weight[e];
    answer.flag = answer.extreme.IsZero();
    report.edges.push_back(answer);
  }
  return report;
}

Antipodes AntipodalImputations(const GameInstance& game) {
  if (game.variant != Variant::kAssignment) {
    throw InputError("antipodal imputations need an assignment game");
  }
  const GameIndex index(game);
  std::vector<int> left, right;
  for (std::size_t v = 0; v < index.ids.size(); ++v) {
    (index.on_left[v] ? left : right).push_back(static_cast<int>(v));
  }
  const UnitFace face(game);
  return Antipodes{VertexPart(game, face.Argmax(left)),
                   VertexPart(game, face.Argmax(right))};
}

MeetJoin ComputeMeetJoin(const GameInstance& game, const Imputation& p,
                         const Imputation& q, const Caps& caps) {
  if (!IsBipartite(game.variant)) {
    throw InputError("meet and join need a bipartite game");
  }
  WorthTable worths(game, caps.multiplicity);
  if (!IsCoreImputation(worths, p, caps.coalitions).in_core ||
      !IsCoreImputation(worths, q, caps.coalitions).in_core) {
    throw InputError("meet and join need two core imputations");
  }
  const GameIndex& index = worths.index();
  MeetJoin out;
  for (std::size_t v = 0; v < index.ids.size(); ++v) {
    const Rational& a = p.profits[v];
    const Rational& b = q.profits[v];
    out.meet.profits.push_back(index.on_left[v] ? Min(a, b) : Max(a, b));
    out.join.profits.push_back(index.on_left[v] ? Max(a, b) : Min(a, b));
  }
  out.meet_in_core = IsCoreImputation(worths, out.meet, caps.coalitions).in_core;
  out.join_in_core = IsCoreImputation(worths, out.join, caps.coalitions).in_core;
  return out;
}

DegeneracyReport Degeneracy(const GameInstance& game, const Caps& caps) {
  DegeneracyReport report;
  const Classification c = ClassifyAll(game, caps.multiplicity);
  report.optimum_count = c.optimum_count;
  report.degenerate = c.optimum_count > 1;
  const auto ids = game.Vertices();
  for (std::size_t v = 0; v < ids.size(); ++v) {
    if (c.vertices[v] == Label::kViable) report.viable_vertices.push_back(ids[v]);
  }
  for (std::size_t e = 0; e < game.edges.size(); ++e) {
    if (c.edges[e] == Label::kViable) {
      report.viable_edges.push_back(EdgeLabel(game.edges[e]));
    }
  }
  if (game.variant != Variant::kAssignment &&
      game.variant != Variant::kGeneralMatching) {
    return report;
  }
  const PaymentReport payments = Payments(game, caps);
  if (payments.core_empty) return report;
  report.never_paid_vertices.emplace();
  report.always_fair_edges.emplace();
  for (std::size_t v = 0; v < ids.size(); ++v) {
    if (!payments.vertices[v].flag) report.never_paid_vertices->push_back(ids[v]);
  }
  for (std::size_t e = 0; e < game.edges.size(); ++e) {
    if (payments.edges[e].flag) {
      report.always_fair_edges->push_back(EdgeLabel(game.edges[e]));
    }
  }
  return report;
}

}  // namespace matchcore
