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

#include "matchcore/bmatching.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "matchcore/errors.h"
#include "matchcore/matching.h"

namespace matchcore {
namespace {

void RequireVariant(const GameInstance& game, Variant variant,
                    const char* what) {
  if (game.variant != variant) {
    throw InputError(std::string(what) + " needs a " +
                     std::string(VariantName(variant)) + " game");
  }
}

bool AllZero(const std::vector<Rational>& values) {
  return std::all_of(values.begin(), values.end(),
                     [](const Rational& r) { return r.IsZero(); });
}

void RequireOptimalDual(const GameInstance& game, const DualSolution& y) {
  if (!IsOptimalDual(game, y)) throw InputError("dual is not optimal");
}

DerivedImputation Finish(const GameInstance& game, std::vector<Rational> profits,
                         const Caps& caps) {
  DerivedImputation out;
  out.imputation.profits = std::move(profits);
  const auto ids = game.Vertices();
  for (std::size_t v = 0; v < ids.size(); ++v) {
    if (out.imputation.profits[v].Sign() < 0) out.negative_entries.push_back(ids[v]);
  }
  out.verdict = IsCoreImputation(game, out.imputation, caps);
  return out;
}

void RequireSplitMatches(const DualSolution& y, const SplitScheme& s) {
  if (s.edges.size() != y.edge_upper.size()) {
    throw InputError("split does not match the dual: wrong edge count");
  }
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    const EdgeSplit& part = s.edges[e];
    const Rational lower = e < y.edge_lower.size() ? y.edge_lower[e] : Rational();
    if (part.upper_left.Sign() < 0 || part.upper_right.Sign() < 0 ||
        part.lower_left.Sign() < 0 || part.lower_right.Sign() < 0 ||
        part.upper_left + part.upper_right != y.edge_upper[e] ||
        part.lower_left + part.lower_right != lower) {
      throw InputError("split does not match the dual at edge " +
                       std::to_string(e));
    }
  }
}

// Shared by the constrained and general constructions: the constrained game
// is the general one with a = c = 0 and d = 1.
std::vector<Rational> SplitProfits(const GameInstance& game,
                                   const DualSolution& y,
                                   const SplitScheme& s) {
  const GameIndex index(game);
  const bool general = game.variant == Variant::kBGeneral;
  std::vector<Rational> profits(index.ids.size());
  for (std::size_t v = 0; v < index.ids.size(); ++v) {
    profits[v] = Rational(index.upper[v]) * y.vertex_upper[v];
    if (general) profits[v] -= Rational(index.lower[v]) * y.vertex_lower[v];
  }
  for (std::size_t e = 0; e < index.endpoints.size(); ++e) {
    const auto [a, b] = index.endpoints[e];
    const Rational d = general ? Rational(game.edges[e].upper.value_or(1)) : Rational(1);
    const Rational c = general ? Rational(index.edge_lower[e]) : Rational();
    const EdgeSplit& part = s.edges[e];
    profits[a] += d * part.upper_left - c * part.lower_left;
    profits[b] += d * part.upper_right - c * part.lower_right;
  }
  return profits;
}

}  // namespace

bool IsOptimalDual(const GameInstance& game, const DualSolution& y) {
  const std::size_t n = game.left.size() + game.right.size();
  const std::size_t m = game.edges.size();
  if (y.vertex_upper.size() != n || y.vertex_lower.size() > n ||
      y.edge_upper.size() > m || y.edge_lower.size() > m) {
    throw InputError("dual solution does not match the game");
  }
  const bool general = game.variant == Variant::kBGeneral;
  const bool edge_upper = general || game.variant == Variant::kBConstrained;
  if ((!general && (!AllZero(y.vertex_lower) || !AllZero(y.edge_lower))) ||
      (!edge_upper && !AllZero(y.edge_upper))) {
    return false;
  }
  const LinearProgram dual = BuildDualLp(game);
  const auto values = DualToValues(game, y);
  if (!IsFeasible(dual, values)) return false;
  const LPSolution primal = SolveLp(BuildPrimalLp(game));
  if (!primal.optimal()) throw InputError("game has no feasible b-matching");
  return ObjectiveValue(dual, values) == primal.objective_value;
}

DerivedImputation UniformImputationFromDual(const GameInstance& game,
                                            const DualSolution& y,
                                            const Caps& caps) {
  RequireVariant(game, Variant::kBUniform, "uniform imputation");
  RequireOptimalDual(game, y);
  const Rational b(game.UpperBound(game.Vertices().front()));
  std::vector<Rational> profits;
  for (const Rational& value : y.vertex_upper) profits.push_back(b * value);
  return Finish(game, std::move(profits), caps);
}

DualSolution UniformDualFromImputation(const GameInstance& game,
                                       const Imputation& imp,
                                       const Caps& caps) {
  RequireVariant(game, Variant::kBUniform, "uniform inverse map");
  if (!IsCoreImputation(game, imp, caps).in_core) {
    throw InputError("imputation is not in the core");
  }
  const Rational b(game.UpperBound(game.Vertices().front()));
  DualSolution y;
  for (const Rational& p : imp.profits) y.vertex_upper.push_back(p / b);
  y.vertex_lower.assign(y.vertex_upper.size(), Rational());
  y.edge_upper.assign(game.edges.size(), Rational());
  y.edge_lower.assign(game.edges.size(), Rational());
  return y;
}

DerivedImputation UnconImputationFromDual(const GameInstance& game,
                                          const DualSolution& y,
                                          const Caps& caps) {
  RequireVariant(game, Variant::kBUnconstrained, "unconstrained imputation");
  RequireOptimalDual(game, y);
  const auto ids = game.Vertices();
  std::vector<Rational> profits;
  for (std::size_t v = 0; v < ids.size(); ++v) {
    profits.push_back(Rational(game.UpperBound(ids[v])) * y.vertex_upper[v]);
  }
  return Finish(game, std::move(profits), caps);
}

bool InDualImageUncon(const GameInstance& game, const Imputation& imp) {
  if (game.variant != Variant::kBUnconstrained &&
      game.variant != Variant::kBUniform) {
    throw InputError("scaled dual image needs an unconstrained or uniform game");
  }
  const auto ids = game.Vertices();
  if (imp.profits.size() != ids.size()) {
    throw InputError("imputation does not match the game's vertices");
  }
  DualSolution y;
  for (std::size_t v = 0; v < ids.size(); ++v) {
    y.vertex_upper.push_back(imp.profits[v] / Rational(game.UpperBound(ids[v])));
  }
  return IsOptimalDual(game, y);
}

SplitScheme SplitScheme::AllLeft(const DualSolution& y) {
  SplitScheme s;
  for (std::size_t e = 0; e < y.edge_upper.size(); ++e) {
    const Rational lower = e < y.edge_lower.size() ? y.edge_lower[e] : Rational();
    s.edges.push_back({y.edge_upper[e], Rational(), lower, Rational()});
  }
  return s;
}

SplitScheme SplitScheme::AllRight(const DualSolution& y) {
  SplitScheme s;
  for (std::size_t e = 0; e < y.edge_upper.size(); ++e) {
    const Rational lower = e < y.edge_lower.size() ? y.edge_lower[e] : Rational();
    s.edges.push_back({Rational(), y.edge_upper[e], Rational(), lower});
  }
  return s;
}

SplitScheme SplitScheme::Balanced(const DualSolution& y) {
  const Rational half(1, 2);
  SplitScheme s;
  for (std::size_t e = 0; e < y.edge_upper.size(); ++e) {
    const Rational lower = e < y.edge_lower.size() ? y.edge_lower[e] : Rational();
    s.edges.push_back({half * y.edge_upper[e], half * y.edge_upper[e],
                       half * lower, half * lower});
  }
  return s;
}

DerivedImputation ConImputationFromDual(const GameInstance& game,
                                        const DualSolution& y,
                                        const SplitScheme& s,
                                        const Caps& caps) {
  RequireVariant(game, Variant::kBConstrained, "constrained imputation");
  RequireOptimalDual(game, y);
  RequireSplitMatches(y, s);
  return Finish(game, SplitProfits(game, y, s), caps);
}

DerivedImputation GenImputationFromDual(const GameInstance& game,
                                        const DualSolution& y,
                                        const SplitScheme& s,
                                        const Caps& caps) {
  RequireVariant(game, Variant::kBGeneral, "general imputation");
  RequireOptimalDual(game, y);
  RequireSplitMatches(y, s);
  return Finish(game, SplitProfits(game, y, s), caps);
}

bool InDualImage(const GameInstance& game, const Imputation& imp) {
  const GameIndex index(game);
  const std::size_t n = index.ids.size();
  if (imp.profits.size() != n) {
    throw InputError("imputation does not match the game's vertices");
  }
  const LPSolution primal = SolveLp(BuildPrimalLp(game));
  if (!primal.optimal()) throw InputError("game has no feasible b-matching");

  // Dual variables and covering rows, the objective pinned to the optimum,
  // then one left and one right part for every edge dual.
  LinearProgram lp = BuildDualLp(game);
  const std::vector<Rational> cost = lp.objective;
  lp.objective.assign(lp.num_variables(), Rational());
  lp.AddConstraint("optimal", cost, Relation::kEqual, primal.objective_value);

  const std::size_t dual_vars = lp.num_variables();
  std::vector<std::vector<Rational>> profit_rows(n,
                                                 std::vector<Rational>(dual_vars));
  auto vertex_var = [&](const std::string& prefix, std::size_t v) {
    return lp.VariableIndex(prefix + index.ids[v]);
  };
  for (std::size_t v = 0; v < n; ++v) {
    for (const char* prefix : {"y:", "beta:", "alpha:"}) {
      const int k = vertex_var(prefix, v);
      if (k >= 0) profit_rows[v][k] = cost[k];
    }
  }
  for (std::size_t e = 0; e < game.edges.size(); ++e) {
    const auto [a, b] = index.endpoints[e];
    for (const char* prefix : {"z:", "delta:", "gamma:"}) {
      const int k = lp.VariableIndex(prefix + EdgeLabel(game.edges[e]));
      if (k < 0) continue;
      const int left = lp.AddVariable(std::string(prefix) + "left" + EdgeLabel(game.edges[e]));
      const int right = lp.AddVariable(std::string(prefix) + "right" + EdgeLabel(game.edges[e]));
      std::vector<Rational> row(lp.num_variables());
      row[left] = 1;
      row[right] = 1;
      row[k] = -1;
      lp.AddConstraint(std::string("split:") + prefix + EdgeLabel(game.edges[e]),
                       std::move(row), Relation::kEqual, Rational());
      for (auto& r : profit_rows) r.resize(lp.num_variables());
      profit_rows[a][left] = cost[k];
      profit_rows[b][right] = cost[k];
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    lp.AddConstraint("profit:" + index.ids[v], profit_rows[v], Relation::kEqual,
                     imp.profits[v]);
  }
  return SolveLp(lp).status == LpStatus::kOptimal;
}

bool InDualImageCon(const GameInstance& game, const Imputation& imp) {
  RequireVariant(game, Variant::kBConstrained, "constrained dual image");
  return InDualImage(game, imp);
}

CoalitionSystem BuildCoalitionSystem(const GameInstance& game, const Caps& caps,
                                     bool connected_only) {
  WorthTable worths(game, caps.multiplicity);
  CoalitionSystem system;
  system.variables = game.Vertices();
  system.connected_only = connected_only;
  const auto grand = worths.Of(worths.GrandMask());
  if (!grand) throw InputError("game has no feasible b-matching");
  const Coalition all = Coalition::Of(system.variables);
  system.rows.push_back({all, *grand, Relation::kEqual});
  const auto coalitions = connected_only ? ConnectedCoalitions(game, caps.coalitions)
                                         : AllCoalitions(game, caps.coalitions);
  for (const Coalition& c : coalitions) {
    if (c == all) continue;
    const auto w = worths.Of(worths.MaskOf(c));
    if (w) system.rows.push_back({c, *w, Relation::kGreaterEqual});
  }
  return system;
}

CoreVerdict CoreMembershipViaSystem(const CoalitionSystem& system,
                                    const Imputation& imp) {
  if (imp.profits.size() != system.variables.size()) {
    throw InputError("imputation does not match the system's variables");
  }
  std::map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < system.variables.size(); ++i) {
    position[system.variables[i]] = i;
  }
  CoreVerdict verdict;
  for (std::size_t i = 0; i < imp.profits.size(); ++i) {
    if (imp.profits[i].Sign() < 0) {
      verdict.reason = "negative profit";
      verdict.witness = Coalition{{system.variables[i]}};
      verdict.witness_profit = imp.profits[i];
      return verdict;
    }
  }
  for (const SystemRow& row : system.rows) {
    Rational profit;
    for (const auto& id : row.coalition.members) profit += imp.profits[position.at(id)];
    const bool ok = row.relation == Relation::kEqual ? profit == row.rhs
                                                     : profit >= row.rhs;
    if (!ok) {
      verdict.reason = row.relation == Relation::kEqual
                           ? "profits do not sum to the worth"
                           : "coalition worth exceeds its profit";
      verdict.witness = row.coalition;
      verdict.witness_worth = row.rhs;
      verdict.witness_profit = profit;
      return verdict;
    }
  }
  verdict.in_core = true;
  return verdict;
}

LinearProgram SystemLp(const CoalitionSystem& system) {
  LinearProgram lp;
  std::map<std::string, int> position;
  for (const auto& id : system.variables) position[id] = lp.AddVariable("p:" + id);
  for (const SystemRow& row : system.rows) {
    std::vector<Rational> coefficients(lp.num_variables());
    for (const auto& id : row.coalition.members) coefficients[position.at(id)] = 1;
    lp.AddConstraint(CoalitionLabel(row.coalition), std::move(coefficients),
                     row.relation, row.rhs);
  }
  return lp;
}

std::vector<Imputation> SampleSystemVertices(const CoalitionSystem& system,
                                             std::uint32_t seed, int draws) {
  const LinearProgram lp = SystemLp(system);
  const OptimalFace polytope(lp);  // zero objective: the face is everything
  if (!polytope.base().optimal()) return {};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coefficient(-3, 3);
  std::set<std::vector<Rational>> seen;
  std::vector<Imputation> out;
  for (int k = 0; k < draws; ++k) {
    std::vector<Rational> objective;
    for (std::size_t j = 0; j < lp.num_variables(); ++j) {
      objective.push_back(coefficient(rng));
    }
    const LPSolution s = polytope.Optimize(objective, Sense::kMaximize);
    if (s.optimal() && seen.insert(s.values).second) {
      out.push_back(Imputation{s.values});
    }
  }
  return out;
}

}  // namespace matchcore
