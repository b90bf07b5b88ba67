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

#include "matchcore/matching.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "matchcore/errors.h"
#include "matchcore/lp.h"

namespace matchcore {
namespace {

std::int64_t CheckedScale(const Rational& w, std::int64_t scale) {
  const auto v = (w * Rational(scale)).ToInt64();
  if (!v) throw std::overflow_error("edge weight too large to enumerate");
  return *v;
}

// Depth-first search over edge multiplicities in edge-index order, pruned by
// an optimistic bound on the weight still available.
class Enumerator {
 public:
  Enumerator(const GameIndex& index, VertexMask active)
      : index_(index), active_(active) {
    for (std::size_t k = 0; k < index.endpoints.size(); ++k) {
      const auto [a, b] = index.endpoints[k];
      if ((active >> a & 1) && (active >> b & 1)) {
        edges_.push_back(static_cast<int>(k));
      }
    }
    scale_ = 1;
    for (int k : edges_) {
      scale_ = std::lcm(scale_, index.weight[k].DenominatorInt64());
    }
    scaled_.assign(index.endpoints.size(), 0);
    for (int k : edges_) scaled_[k] = CheckedScale(index.weight[k], scale_);
    potential_.assign(edges_.size() + 1, 0);
    for (int p = static_cast<int>(edges_.size()) - 1; p >= 0; --p) {
      const int k = edges_[p];
      potential_[p] = potential_[p + 1] + scaled_[k] * index.edge_cap[k];
    }
    load_.assign(index.ids.size(), 0);
    remaining_.assign(index.ids.size(), 0);
    for (int k : edges_) {
      remaining_[index.endpoints[k].first] += index.edge_cap[k];
      remaining_[index.endpoints[k].second] += index.edge_cap[k];
    }
    current_.assign(index.endpoints.size(), 0);
  }

  Optima Run() {
    Search(0, 0);
    Optima out;
    out.feasible = have_best_;
    if (!have_best_) return out;
    out.max_weight = Rational(best_, scale_);
    for (const auto& m : found_) {
      std::vector<Rational> mult(m.begin(), m.end());
      MatchingVector x{std::move(mult), out.max_weight};
      out.matchings.push_back(std::move(x));
    }
    return out;
  }

 private:
  bool LowerReachable(int v) const {
    return load_[v] + remaining_[v] >= index_.lower[v];
  }

  void Search(std::size_t pos, std::int64_t weight) {
    if (have_best_ && weight + potential_[pos] < best_) return;
    if (pos == edges_.size()) {
      for (std::size_t v = 0; v < index_.ids.size(); ++v) {
        if ((active_ >> v & 1) && load_[v] < index_.lower[v]) return;
      }
      if (!have_best_ || weight > best_) {
        have_best_ = true;
        best_ = weight;
        found_.clear();
      }
      found_.push_back(current_);
      return;
    }
    const int k = edges_[pos];
    const auto [a, b] = index_.endpoints[k];
    const std::int64_t cap = index_.edge_cap[k];
    const std::int64_t most = std::min(
        {cap, index_.upper[a] - load_[a], index_.upper[b] - load_[b]});
    remaining_[a] -= cap;
    remaining_[b] -= cap;
    for (std::int64_t m = most; m >= index_.edge_lower[k]; --m) {
      load_[a] += m;
      load_[b] += m;
      current_[k] = m;
      const bool reachable = LowerReachable(a) && LowerReachable(b);
      if (reachable) Search(pos + 1, weight + m * scaled_[k]);
      load_[a] -= m;
      load_[b] -= m;
      current_[k] = 0;
      if (!reachable) break;  // smaller multiplicities only do worse
    }
    remaining_[a] += cap;
    remaining_[b] += cap;
  }

  const GameIndex& index_;
  VertexMask active_;
  std::vector<int> edges_;
  std::int64_t scale_ = 1;
  std::vector<std::int64_t> scaled_;
  std::vector<std::int64_t> potential_;
  std::vector<std::int64_t> load_;
  std::vector<std::int64_t> remaining_;
  std::vector<std::int64_t> current_;
  bool have_best_ = false;
  std::int64_t best_ = 0;
  std::vector<std::vector<std::int64_t>> found_;
};

void RequireFractionalMatching(const GameIndex& index,
                               const MatchingVector& x) {
  if (x.multiplicity.size() != index.endpoints.size()) {
    throw InputError("matching vector has wrong length");
  }
  for (const Rational& m : x.multiplicity) {
    if (m.Sign() < 0 || m > Rational(1)) {
      throw InputError("multiplicity outside [0, 1]");
    }
  }
  for (const Rational& load : VertexLoads(index, x)) {
    if (load > Rational(1)) throw InputError("vertex load exceeds 1");
  }
}

}  // namespace

MatchingVector MakeMatching(const GameInstance& game,
                            std::vector<Rational> multiplicity) {
  if (multiplicity.size() != game.edges.size()) {
    throw InputError("matching vector has wrong length");
  }
  Rational weight;
  for (std::size_t k = 0; k < multiplicity.size(); ++k) {
    if (!multiplicity[k].IsZero()) weight += multiplicity[k] * game.edges[k].weight;
  }
  return {std::move(multiplicity), std::move(weight)};
}

std::vector<Rational> VertexLoads(const GameIndex& index,
                                  const MatchingVector& x) {
  std::vector<Rational> load(index.ids.size());
  for (std::size_t k = 0; k < index.endpoints.size(); ++k) {
    if (x.multiplicity[k].IsZero()) continue;
    load[index.endpoints[k].first] += x.multiplicity[k];
    load[index.endpoints[k].second] += x.multiplicity[k];
  }
  return load;
}

Optima BruteForceOptima(const GameIndex& index, VertexMask active, int cap) {
  long long budget = 0;
  for (std::size_t v = 0; v < index.ids.size(); ++v) {
    if (active >> v & 1) budget += index.upper[v];
  }
  if (budget > cap) throw CapExceeded("b-matching enumeration", cap, budget);
  return Enumerator(index, active).Run();
}

Optima BruteForceOptima(const GameInstance& game, int cap) {
  const GameIndex index(game);
  if (index.ids.size() > 31) {
    throw CapExceeded("b-matching enumeration", 31,
                      static_cast<long long>(index.ids.size()));
  }
  const VertexMask all = (VertexMask{1} << index.ids.size()) - 1;
  return BruteForceOptima(index, all, cap);
}

MatchingVector FractionalOptimum(const GameInstance& game) {
  const LPSolution s = SolveLp(BuildPrimalLp(game));
  if (!s.optimal()) {
    throw InputError("primal LP is " + std::string(LpStatusName(s.status)));
  }
  return MakeMatching(game, s.values);
}

HalfIntegralReport CheckHalfIntegral(const GameInstance& game,
                                     const MatchingVector& x) {
  const GameIndex index(game);
  HalfIntegralReport report;
  if (x.multiplicity.size() != index.endpoints.size()) {
    report.failure = "matching vector has wrong length";
    return report;
  }
  const Rational half(1, 2);
  const std::size_t n = index.ids.size();
  std::vector<int> one_degree(n, 0);
  std::vector<std::vector<int>> half_adj(n);
  for (std::size_t k = 0; k < x.multiplicity.size(); ++k) {
    const Rational& m = x.multiplicity[k];
    const auto [a, b] = index.endpoints[k];
    if (m.IsZero()) continue;
    if (m == Rational(1)) {
      report.ones.push_back(static_cast<int>(k));
      ++one_degree[a];
      ++one_degree[b];
    } else if (m == half) {
      report.halves.push_back(static_cast<int>(k));
      half_adj[a].push_back(static_cast<int>(k));
      half_adj[b].push_back(static_cast<int>(k));
    } else {
      report.failure = "edge " + EdgeLabel(game.edges[k]) + " has value " +
                       m.ToString();
      return report;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (one_degree[v] > 1) {
      report.failure = "1-edges share vertex " + index.ids[v];
      return report;
    }
    if (!half_adj[v].empty() && half_adj[v].size() != 2) {
      report.failure = "vertex " + index.ids[v] + " has half-degree " +
                       std::to_string(half_adj[v].size());
      return report;
    }
    if (one_degree[v] && !half_adj[v].empty()) {
      report.failure = "vertex " + index.ids[v] + " meets both a 1-edge and a 1/2-edge";
      return report;
    }
  }
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start] || half_adj[start].empty()) continue;
    std::vector<std::string> cycle;
    int v = static_cast<int>(start);
    int via = -1;
    while (!seen[v]) {
      seen[v] = true;
      cycle.push_back(index.ids[v]);
      const auto& adj = half_adj[v];
      const int e = adj[0] != via ? adj[0] : adj[1];
      const auto [a, b] = index.endpoints[e];
      v = a == v ? b : a;
      via = e;
    }
    if (cycle.size() % 2 == 0) {
      report.failure = "1/2-edges form an even cycle through " + cycle.front();
      return report;
    }
    report.half_cycles.push_back(std::move(cycle));
  }
  report.is_half_integral = true;
  return report;
}

std::vector<BirkhoffTerm> BirkhoffDecompose(const GameInstance& game,
                                            const MatchingVector& x) {
  if (!IsBipartite(game.variant)) {
    throw InputError("Birkhoff decomposition needs a bipartite game");
  }
  const GameIndex index(game);
  RequireFractionalMatching(index, x);
  const std::size_t n = index.ids.size();
  const std::size_t m = index.endpoints.size();

  std::vector<Rational> rest = x.multiplicity;
  Rational budget(1);
  std::vector<BirkhoffTerm> terms;
  auto nonzero = [&rest] {
    return std::any_of(rest.begin(), rest.end(),
                       [](const Rational& r) { return !r.IsZero(); });
  };

  for (std::size_t round = 0; nonzero(); ++round) {
    if (round > n + m) throw std::logic_error("Birkhoff decomposition stalled");
    const std::vector<Rational> load = VertexLoads(index, MatchingVector{rest, {}});
    std::vector<int> tight;
    for (std::size_t v = 0; v < n; ++v) {
      if (!load[v].IsZero() && load[v] == budget) tight.push_back(static_cast<int>(v));
    }

    std::vector<bool> covered(n, false);
    std::vector<int> chosen;
    auto cover = [&](auto&& self, std::size_t i) -> bool {
      while (i < tight.size() && covered[tight[i]]) ++i;
      if (i == tight.size()) return true;
      const int v = tight[i];
      std::vector<int> options = index.incident[v];
      std::sort(options.begin(), options.end());
      for (int e : options) {
        if (rest[e].IsZero()) continue;
        const auto [a, b] = index.endpoints[e];
        const int w = a == v ? b : a;
        if (covered[w]) continue;
        covered[v] = covered[w] = true;
        chosen.push_back(e);
        if (self(self, i + 1)) return true;
        chosen.pop_back();
        covered[v] = covered[w] = false;
      }
      return false;
    };
    if (!cover(cover, 0)) {
      throw InputError("no matching covers the saturated vertices");
    }
    for (std::size_t e = 0; e < m; ++e) {
      const auto [a, b] = index.endpoints[e];
      if (!rest[e].IsZero() && !covered[a] && !covered[b]) {
        covered[a] = covered[b] = true;
        chosen.push_back(static_cast<int>(e));
      }
    }

    Rational step = rest[chosen.front()];
    for (int e : chosen) step = Min(step, rest[e]);
    for (std::size_t v = 0; v < n; ++v) {
      if (!covered[v] && !load[v].IsZero()) step = Min(step, budget - load[v]);
    }

    std::vector<Rational> indicator(m);
    for (int e : chosen) {
      indicator[e] = 1;
      rest[e] -= step;
    }
    budget -= step;
    MatchingVector matching = MakeMatching(game, std::move(indicator));
    auto same = std::find_if(terms.begin(), terms.end(), [&](const BirkhoffTerm& t) {
      return t.matching.multiplicity == matching.multiplicity;
    });
    if (same != terms.end()) {
      same->coefficient += step;
    } else {
      terms.push_back({step, std::move(matching)});
    }
  }
  return terms;
}

std::string_view LabelName(Label label) {
  switch (label) {
    case Label::kEssential:
      return "essential";
    case Label::kViable:
      return "viable";
    case Label::kSubpar:
      return "subpar";
  }
  return "unknown";
}

Classification ClassifyAll(const GameInstance& game, int cap) {
  const GameIndex index(game);
  const Optima optima = BruteForceOptima(game, cap);
  if (!optima.feasible) throw InputError("game has no feasible b-matching");
  auto label = [&](std::size_t hits) {
    if (hits == optima.matchings.size()) return Label::kEssential;
    if (hits == 0) return Label::kSubpar;
    return Label::kViable;
  };
  Classification out;
  out.optimum_count = optima.matchings.size();
  std::vector<std::size_t> vertex_hits(index.ids.size(), 0);
  std::vector<std::size_t> edge_hits(index.endpoints.size(), 0);
  for (const MatchingVector& x : optima.matchings) {
    const auto load = VertexLoads(index, x);
    for (std::size_t v = 0; v < load.size(); ++v) {
      if (load[v].Sign() > 0) ++vertex_hits[v];
    }
    for (std::size_t k = 0; k < x.multiplicity.size(); ++k) {
      if (x.multiplicity[k].Sign() > 0) ++edge_hits[k];
    }
  }
  for (std::size_t h : vertex_hits) out.vertices.push_back(label(h));
  for (std::size_t h : edge_hits) out.edges.push_back(label(h));
  return out;
}

Label ClassifyVertex(const GameInstance& game, const std::string& vertex,
                     int cap) {
  const GameIndex index(game);
  const int v = index.VertexOf(vertex);
  if (v < 0) throw InputError("unknown vertex '" + vertex + "'");
  return ClassifyAll(game, cap).vertices[v];
}

Label ClassifyEdge(const GameInstance& game, const std::string& a,
                   const std::string& b, int cap) {
  const GameIndex index(game);
  const int e = index.EdgeOf(a, b);
  if (e < 0) throw InputError("unknown edge (" + a + "," + b + ")");
  return ClassifyAll(game, cap).edges[e];
}

}  // namespace matchcore
