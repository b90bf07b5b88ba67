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

#include <stdexcept>

#include "matchcore/errors.h"
#include "matchcore/lp.h"

namespace matchcore {
namespace {

bool HasEdgeUpperDual(Variant v) {
  return v == Variant::kBConstrained || v == Variant::kBGeneral;
}

std::string VertexDualName(Variant v) {
  return v == Variant::kBGeneral ? "beta:" : "y:";
}

std::string EdgeDualName(Variant v) {
  return v == Variant::kBGeneral ? "delta:" : "z:";
}

}  // namespace

LinearProgram BuildPrimalLp(const GameInstance& game) {
  const GameIndex index(game);
  LinearProgram lp;
  lp.sense = Sense::kMaximize;
  for (const Edge& e : game.edges) lp.AddVariable("x:" + EdgeLabel(e), e.weight);

  const bool general = game.variant == Variant::kBGeneral;
  auto vertex_rows = [&](const std::vector<std::string>& side) {
    for (const auto& id : side) {
      const int v = index.VertexOf(id);
      std::vector<Rational> row(lp.num_variables());
      for (int e : index.incident[v]) row[e] = 1;
      if (general) {
        lp.AddConstraint("lower:" + id, row, Relation::kGreaterEqual,
                         index.lower[v]);
      }
      lp.AddConstraint("upper:" + id, std::move(row), Relation::kLessEqual,
                       index.upper[v]);
    }
  };
  vertex_rows(game.left);
  vertex_rows(game.right);

  if (game.variant == Variant::kBConstrained || general) {
    for (std::size_t k = 0; k < game.edges.size(); ++k) {
      const Edge& e = game.edges[k];
      std::vector<Rational> row(lp.num_variables());
      row[k] = 1;
      if (general) {
        lp.AddConstraint("edge-lower:" + EdgeLabel(e), row,
                         Relation::kGreaterEqual, game.EdgeLower(e));
      }
      const std::int64_t d = general ? e.upper.value_or(1) : 1;
      lp.AddConstraint("edge-upper:" + EdgeLabel(e), std::move(row),
                       Relation::kLessEqual, d);
    }
  }
  return lp;
}

LinearProgram BuildDualLp(const GameInstance& game) {
  const GameIndex index(game);
  const Variant variant = game.variant;
  const bool general = variant == Variant::kBGeneral;
  LinearProgram lp;
  lp.sense = Sense::kMinimize;

  const int n = static_cast<int>(index.ids.size());
  const int m = static_cast<int>(game.edges.size());
  for (int v = 0; v < n; ++v) {
    lp.AddVariable(VertexDualName(variant) + index.ids[v], index.upper[v]);
  }
  if (general) {
    for (int v = 0; v < n; ++v) {
      lp.AddVariable("alpha:" + index.ids[v], -Rational(index.lower[v]));
    }
  }
  if (HasEdgeUpperDual(variant)) {
    for (int k = 0; k < m; ++k) {
      const Edge& e = game.edges[k];
      lp.AddVariable(EdgeDualName(variant) + EdgeLabel(e),
                     general ? e.upper.value_or(1) : 1);
    }
  }
  if (general) {
    for (int k = 0; k < m; ++k) {
      lp.AddVariable("gamma:" + EdgeLabel(game.edges[k]),
                     -Rational(index.edge_lower[k]));
    }
  }

  for (int k = 0; k < m; ++k) {
    const auto [a, b] = index.endpoints[k];
    std::vector<Rational> row(lp.num_variables());
    row[a] = 1;
    row[b] = 1;
    int next = n;
    if (general) {
      row[next + a] = -1;
      row[next + b] = -1;
      next += n;
    }
    if (HasEdgeUpperDual(variant)) {
      row[next + k] = 1;
      next += m;
    }
    if (general) row[next + k] = -1;
    lp.AddConstraint("cover:" + EdgeLabel(game.edges[k]), std::move(row),
                     Relation::kGreaterEqual, index.weight[k]);
  }
  return lp;
}

DualSolution DualFromValues(const GameInstance& game,
                            std::span<const Rational> values) {
  const std::size_t n = game.left.size() + game.right.size();
  const std::size_t m = game.edges.size();
  const bool general = game.variant == Variant::kBGeneral;
  const bool edge_upper = HasEdgeUpperDual(game.variant);
  const std::size_t expected =
      n + (general ? n + 2 * m : 0) + (edge_upper && !general ? m : 0);
  if (values.size() != expected) {
    throw InputError("dual vector has " + std::to_string(values.size()) +
                     " entries, expected " + std::to_string(expected));
  }
  DualSolution d;
  d.vertex_upper.assign(values.begin(), values.begin() + n);
  d.vertex_lower.assign(n, Rational());
  d.edge_upper.assign(m, Rational());
  d.edge_lower.assign(m, Rational());
  std::size_t next = n;
  if (general) {
    for (std::size_t v = 0; v < n; ++v) d.vertex_lower[v] = values[next + v];
    next += n;
  }
  if (edge_upper) {
    for (std::size_t k = 0; k < m; ++k) d.edge_upper[k] = values[next + k];
    next += m;
  }
  if (general) {
    for (std::size_t k = 0; k < m; ++k) d.edge_lower[k] = values[next + k];
  }
  return d;
}

std::vector<Rational> DualToValues(const GameInstance& game,
                                   const DualSolution& dual) {
  const std::size_t n = game.left.size() + game.right.size();
  const std::size_t m = game.edges.size();
  if (dual.vertex_upper.size() != n) {
    throw InputError("dual solution does not match the game's vertices");
  }
  auto padded = [](const std::vector<Rational>& v, std::size_t size) {
    std::vector<Rational> out = v;
    if (out.size() > size) throw InputError("dual solution too long");
    out.resize(size);
    return out;
  };
  std::vector<Rational> values = dual.vertex_upper;
  const bool general = game.variant == Variant::kBGeneral;
  if (general) {
    const auto lower = padded(dual.vertex_lower, n);
    values.insert(values.end(), lower.begin(), lower.end());
  }
  if (HasEdgeUpperDual(game.variant)) {
    const auto upper = padded(dual.edge_upper, m);
    values.insert(values.end(), upper.begin(), upper.end());
  }
  if (general) {
    const auto lower = padded(dual.edge_lower, m);
    values.insert(values.end(), lower.begin(), lower.end());
  }
  return values;
}

DualSolution SolveDual(const GameInstance& game) {
  const LPSolution s = SolveLp(BuildDualLp(game));
  if (!s.optimal()) {
    throw std::logic_error("dual LP is " + std::string(LpStatusName(s.status)));
  }
  return DualFromValues(game, s.values);
}

DualityReport VerifyDuality(const GameInstance& game,
                            std::span<const Rational> x,
                            std::span<const Rational> y) {
  const LinearProgram primal = BuildPrimalLp(game);
  const LinearProgram dual = BuildDualLp(game);
  if (x.size() != primal.num_variables() || y.size() != dual.num_variables()) {
    throw InputError("primal/dual vector dimension mismatch");
  }
  DualityReport report;
  report.primal_feasible = IsFeasible(primal, x);
  report.dual_feasible = IsFeasible(dual, y);
  report.primal_objective = ObjectiveValue(primal, x);
  report.dual_objective = ObjectiveValue(dual, y);
  report.objectives_equal = report.primal_objective == report.dual_objective;
  for (std::size_t i = 0; i < primal.constraints.size(); ++i) {
    if (RowActivity(primal.constraints[i], x) == primal.constraints[i].rhs) {
      report.tight_primal_rows.push_back(i);
    }
  }
  for (std::size_t i = 0; i < dual.constraints.size(); ++i) {
    Rational slack = RowActivity(dual.constraints[i], y) - dual.constraints[i].rhs;
    if (slack.IsZero()) report.tight_dual_rows.push_back(i);
    report.dual_row_slack.push_back(std::move(slack));
  }
  return report;
}

}  // namespace matchcore
