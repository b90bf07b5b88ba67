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

#ifndef MATCHCORE_GAME_H_
#define MATCHCORE_GAME_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matchcore/rational.h"

namespace matchcore {

enum class Variant {
  kAssignment,
  kGeneralMatching,
  kBUniform,
  kBUnconstrained,
  kBConstrained,
  kBGeneral,
};

std::string_view VariantName(Variant variant);
std::optional<Variant> ParseVariant(std::string_view name);

// Everything except general matching lives on a bipartition (U, V).
inline bool IsBipartite(Variant v) { return v != Variant::kGeneralMatching; }
inline bool IsBMatching(Variant v) {
  return v == Variant::kBUniform || v == Variant::kBUnconstrained ||
         v == Variant::kBConstrained || v == Variant::kBGeneral;
}

// An edge (i, j). For bipartite variants `first` is on the left side.
// `lower` / `upper` are the per-edge multiplicity bounds c_ij / d_ij; they
// are only meaningful for the variants that admit them (see EdgeCap).
struct Edge {
  std::string first;
  std::string second;
  Rational weight;
  std::optional<std::int64_t> lower;
  std::optional<std::int64_t> upper;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// A matching game. Vertex ids are opaque strings and sides are explicit.
// General-matching games keep every vertex in `right` and leave `left` empty.
struct GameInstance {
  std::string name;
  std::string provenance;
  Variant variant = Variant::kAssignment;
  std::vector<std::string> left;
  std::vector<std::string> right;
  std::vector<Edge> edges;
  std::map<std::string, std::int64_t> vertex_lower;  // a_i, b-general only
  std::map<std::string, std::int64_t> vertex_upper;  // b_i

  // Left vertices followed by right vertices. This is the canonical vertex
  // order for imputations and dual solutions.
  std::vector<std::string> Vertices() const;

  std::int64_t LowerBound(const std::string& vertex) const;
  std::int64_t UpperBound(const std::string& vertex) const;
  std::int64_t EdgeLower(const Edge& e) const;
  // Effective per-edge multiplicity cap, already clipped by the endpoint
  // bounds: 1 for assignment, general and constrained games; min(b_i, b_j)
  // for the uniform and unconstrained variants; min(d_ij, b_i, b_j) for the
  // general b-matching game.
  std::int64_t EdgeCap(const Edge& e) const;

  friend bool operator==(const GameInstance&, const GameInstance&) = default;
};

std::string EdgeLabel(const Edge& e);

struct Violation {
  std::string code;
  std::string subject;

  std::string Message() const { return code + ": " + subject; }
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

ValidationReport ValidateGame(const GameInstance& game);

// A set of vertex ids, stored sorted and deduplicated.
struct Coalition {
  std::vector<std::string> members;

  static Coalition Of(std::vector<std::string> ids);
  bool Contains(const std::string& id) const;

  friend bool operator==(const Coalition&, const Coalition&) = default;
  friend auto operator<=>(const Coalition&, const Coalition&) = default;
};

std::string CoalitionLabel(const Coalition& c);

// Keeps exactly the vertices of `coalition` (in the game's order) and the
// edges with both endpoints inside; bounds are inherited unchanged.
// Throws InputError if a member is not a vertex of `game`.
GameInstance InduceSubgame(const GameInstance& game,
                           const Coalition& coalition);

inline constexpr int kDefaultCoalitionCap = 16;

// Nonempty vertex subsets whose induced subgraph is connected, singletons
// included, sorted lexicographically by sorted member ids. Throws
// CapExceeded when the game has more than `cap` vertices.
std::vector<Coalition> ConnectedCoalitions(const GameInstance& game,
                                           int cap = kDefaultCoalitionCap);

// Every nonempty vertex subset, same order and cap as ConnectedCoalitions.
std::vector<Coalition> AllCoalitions(const GameInstance& game,
                                     int cap = kDefaultCoalitionCap);

// Integer view of a game used by the enumeration and LP code. Vertex k is
// Vertices()[k]; edge e keeps the index of game.edges.
struct GameIndex {
  explicit GameIndex(const GameInstance& game);

  int VertexOf(const std::string& id) const;  // -1 when absent.
  int EdgeOf(const std::string& a, const std::string& b) const;  // -1 too.

  Variant variant;
  std::vector<std::string> ids;
  std::vector<bool> on_left;
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;
  std::vector<std::pair<int, int>> endpoints;
  std::vector<Rational> weight;
  std::vector<std::int64_t> edge_lower;
  std::vector<std::int64_t> edge_cap;
  std::vector<std::vector<int>> incident;
  std::map<std::string, int> position;
};

using VertexMask = std::uint32_t;

// Connected components of the subgraph induced by `mask`.
std::vector<VertexMask> Components(const GameIndex& index, VertexMask mask);

}  // namespace matchcore

#endif  // MATCHCORE_GAME_H_
