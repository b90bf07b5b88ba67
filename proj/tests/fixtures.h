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

#ifndef MATCHCORE_TESTS_FIXTURES_H_
#define MATCHCORE_TESTS_FIXTURES_H_

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "matchcore/game.h"
#include "matchcore/rational.h"

namespace matchcore::testing {

using EdgeSpec = std::tuple<std::string, std::string, std::string>;

inline Rational R(const char* text) { return Rational::Parse(text); }

inline GameInstance MakeGame(Variant variant, std::vector<std::string> left,
                             std::vector<std::string> right,
                             const std::vector<EdgeSpec>& edges,
                             std::map<std::string, std::int64_t> b = {}) {
  GameInstance g;
  g.variant = variant;
  g.left = std::move(left);
  g.right = std::move(right);
  for (const auto& [a, c, w] : edges) {
    g.edges.push_back(Edge{a, c, Rational::Parse(w), std::nullopt, std::nullopt});
  }
  g.vertex_upper = std::move(b);
  return g;
}

// Star u - v1, u - v2.
inline GameInstance Example1(const char* w1, const char* w2) {
  return MakeGame(Variant::kAssignment, {"u"}, {"v1", "v2"},
                  {{"u", "v1", w1}, {"u", "v2", w2}});
}

inline GameInstance Example2() {
  return MakeGame(Variant::kAssignment, {"u1", "u2"}, {"v1", "v2", "v3"},
                  {{"u1", "v1", "1"},
                   {"u1", "v2", "1.1"},
                   {"u2", "v2", "1.1"},
                   {"u2", "v3", "1"}});
}

inline GameInstance Example3() {
  return MakeGame(Variant::kAssignment, {"u1", "u2", "u3"}, {"v1", "v2"},
                  {{"u1", "v1", "1"},
                   {"u1", "v2", "1"},
                   {"u2", "v1", "1"},
                   {"u2", "v2", "0.4"},
                   {"u3", "v2", "0.9"}});
}

inline GameInstance Example4() {
  return MakeGame(Variant::kAssignment, {"u1", "u2", "u3", "u4"},
                  {"v1", "v2", "v3", "v4"},
                  {{"u1", "v1", "100"},
                   {"u2", "v2", "100"},
                   {"u1", "v3", "51"},
                   {"u2", "v4", "51"},
                   {"u3", "v2", "50"},
                   {"u4", "v1", "50"}});
}

// Ten-edge reconstruction: weight 2 on (v2,v7), 1 elsewhere.
inline GameInstance Example5() {
  return MakeGame(Variant::kGeneralMatching, {},
                  {"v1", "v2", "v3", "v4", "v5", "v6", "v7"},
                  {{"v1", "v2", "1"},
                   {"v2", "v7", "2"},
                   {"v3", "v7", "1"},
                   {"v2", "v3", "1"},
                   {"v1", "v7", "1"},
                   {"v3", "v4", "1"},
                   {"v4", "v5", "1"},
                   {"v5", "v6", "1"},
                   {"v1", "v6", "1"},
                   {"v4", "v7", "1"}});
}

inline GameInstance Example6() {
  return MakeGame(Variant::kGeneralMatching, {}, {"v1", "v2", "v3", "v4"},
                  {{"v1", "v2", "1.5"},
                   {"v2", "v3", "1"},
                   {"v3", "v1", "1.5"},
                   {"v1", "v4", "1"}});
}

inline GameInstance K3() {
  return MakeGame(Variant::kGeneralMatching, {}, {"i", "j", "k"},
                  {{"i", "j", "1"}, {"j", "k", "1"}, {"i", "k", "1"}});
}

// b = 2, 1, 2, 1 on u1, u2, v1, v2; weights 1, 3, 1.
inline GameInstance Fig7(Variant variant) {
  return MakeGame(variant, {"u1", "u2"}, {"v1", "v2"},
                  {{"u1", "v1", "1"}, {"u1", "v2", "3"}, {"u2", "v2", "1"}},
                  {{"u1", 2}, {"u2", 1}, {"v1", 2}, {"v2", 1}});
}

inline std::vector<Rational> Vec(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (const char* s : items) out.push_back(Rational::Parse(s));
  return out;
}

// Random bipartite game on up to `max_side` + `max_side` vertices with
// weights drawn from `weights`. Every vertex id is "u<k>" or "v<k>".
inline GameInstance RandomBipartite(std::mt19937& rng, Variant variant,
                                    int max_side,
                                    const std::vector<std::string>& weights,
                                    int max_b = 1, double density = 0.6) {
  std::uniform_int_distribution<int> side(1, max_side);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(weights.size()) - 1);
  std::uniform_int_distribution<int> bound(1, max_b);
  std::bernoulli_distribution keep(density);
  GameInstance g;
  g.variant = variant;
  const int nl = side(rng);
  const int nr = side(rng);
  for (int i = 1; i <= nl; ++i) g.left.push_back("u" + std::to_string(i));
  for (int j = 1; j <= nr; ++j) g.right.push_back("v" + std::to_string(j));
  for (const auto& a : g.left) {
    for (const auto& b : g.right) {
      if (keep(rng)) {
        g.edges.push_back(
            Edge{a, b, Rational::Parse(weights[pick(rng)]), std::nullopt, std::nullopt});
      }
    }
  }
  if (g.edges.empty()) {
    g.edges.push_back(Edge{g.left[0], g.right[0], Rational::Parse(weights[0]),
                           std::nullopt, std::nullopt});
  }
  if (variant == Variant::kBUniform) {
    const int b = bound(rng);
    for (const auto& id : g.Vertices()) g.vertex_upper[id] = b;
  } else if (IsBMatching(variant)) {
    for (const auto& id : g.Vertices()) g.vertex_upper[id] = bound(rng);
  }
  return g;
}

// Random simple graph on 2..max_n vertices "v1".."vn".
inline GameInstance RandomGeneral(std::mt19937& rng, int max_n,
                                  const std::vector<std::string>& weights,
                                  double density = 0.5) {
  std::uniform_int_distribution<int> count(2, max_n);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(weights.size()) - 1);
  std::bernoulli_distribution keep(density);
  GameInstance g;
  g.variant = Variant::kGeneralMatching;
  const int n = count(rng);
  for (int i = 1; i <= n; ++i) g.right.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (keep(rng)) {
        g.edges.push_back(Edge{g.right[i], g.right[j],
                               Rational::Parse(weights[pick(rng)]), std::nullopt,
                               std::nullopt});
      }
    }
  }
  if (g.edges.empty()) {
    g.edges.push_back(Edge{g.right[0], g.right[1], Rational::Parse(weights[0]),
                           std::nullopt, std::nullopt});
  }
  return g;
}

// Maximum weight of an integral b-matching by plain recursion over edge
// multiplicities, with no pruning. Independent of BruteForceOptima.
inline Rational NaiveMaxWeight(const GameInstance& g) {
  std::map<std::string, std::int64_t> load;
  Rational best;
  bool any = false;
  auto rec = [&](auto&& self, std::size_t k, Rational w) -> void {
    if (k == g.edges.size()) {
      for (const auto& id : g.Vertices()) {
        if (load[id] < g.LowerBound(id)) return;
      }
      if (!any || w > best) best = w;
      any = true;
      return;
    }
    const Edge& e = g.edges[k];
    for (std::int64_t m = g.EdgeLower(e); m <= g.EdgeCap(e); ++m) {
      if (load[e.first] + m > g.UpperBound(e.first) ||
          load[e.second] + m > g.UpperBound(e.second)) {
        break;
      }
      load[e.first] += m;
      load[e.second] += m;
      self(self, k + 1, w + e.weight * Rational(m));
      load[e.first] -= m;
      load[e.second] -= m;
    }
  };
  rec(rec, 0, Rational());
  return best;
}

}  // namespace matchcore::testing

#endif  // MATCHCORE_TESTS_FIXTURES_H_
