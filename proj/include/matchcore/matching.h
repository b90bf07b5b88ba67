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

#ifndef MATCHCORE_MATCHING_H_
#define MATCHCORE_MATCHING_H_

#include <string>
#include <vector>

#include "matchcore/game.h"
#include "matchcore/rational.h"

namespace matchcore {

// Edge multiplicities aligned with game.edges, plus the cached weight.
struct MatchingVector {
  std::vector<Rational> multiplicity;
  Rational weight;

  friend bool operator==(const MatchingVector&, const MatchingVector&) = default;
};

MatchingVector MakeMatching(const GameInstance& game,
                            std::vector<Rational> multiplicity);

// Sum of multiplicities on the edges at each vertex, in Vertices() order.
std::vector<Rational> VertexLoads(const GameIndex& index,
                                  const MatchingVector& x);

struct Optima {
  bool feasible = true;  // false when b-general lower bounds cannot be met
  Rational max_weight;
  std::vector<MatchingVector> matchings;  // every optimal integral matching
};

// Total multiplicity budget (sum of vertex upper bounds) allowed in an
// exhaustive enumeration.
inline constexpr int kDefaultMultiplicityCap = 24;

// Exhaustive branch-and-bound over integral b-matchings that respect the
// variant's vertex and edge bounds. Returns the exact optimum and all
// optimal matchings. Throws CapExceeded past `cap`.
Optima BruteForceOptima(const GameInstance& game,
                        int cap = kDefaultMultiplicityCap);

// Same, restricted to the subgraph induced by `active`. Matchings are still
// indexed by the full game's edges.
Optima BruteForceOptima(const GameIndex& index, VertexMask active,
                        int cap = kDefaultMultiplicityCap);

// Optimal vertex of the primal LP relaxation. Throws InputError if the LP
// is infeasible (b-general lower bounds).
MatchingVector FractionalOptimum(const GameInstance& game);

struct HalfIntegralReport {
  bool is_half_integral = false;
  std::vector<int> ones;
  std::vector<int> halves;
  std::vector<std::vector<std::string>> half_cycles;  // vertex sequences
  std::string failure;  // empty on success
};

// Checks the structure of a half-integral vertex: entries in {0, 1/2, 1},
// the 1-edges form a matching, the 1/2-edges form vertex-disjoint odd cycles
// that avoid the 1-edges.
HalfIntegralReport CheckHalfIntegral(const GameInstance& game,
                                     const MatchingVector& x);

struct BirkhoffTerm {
  Rational coefficient;
  MatchingVector matching;
};

// Writes a fractional matching of a bipartite game as a positive
// combination of integral matchings with total coefficient <= 1. Each round
// picks a matching on the current support that covers every vertex whose
// load equals the remaining budget (lowest edge index first) and subtracts
// as much of it as possible. Throws InputError when `x` is not a fractional
// matching of `game`.
std::vector<BirkhoffTerm> BirkhoffDecompose(const GameInstance& game,
                                            const MatchingVector& x);

enum class Label { kEssential, kViable, kSubpar };
std::string_view LabelName(Label label);

struct Classification {
  std::size_t optimum_count = 0;
  std::vector<Label> vertices;  // Vertices() order
  std::vector<Label> edges;     // game.edges order
};

// Essential: positive load/multiplicity in every optimal integral matching;
// subpar: in none; viable otherwise.
Classification ClassifyAll(const GameInstance& game,
                           int cap = kDefaultMultiplicityCap);
Label ClassifyVertex(const GameInstance& game, const std::string& vertex,
                     int cap = kDefaultMultiplicityCap);
Label ClassifyEdge(const GameInstance& game, const std::string& a,
                   const std::string& b, int cap = kDefaultMultiplicityCap);

}  // namespace matchcore

#endif  // MATCHCORE_MATCHING_H_
