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
#include <set>

#include "matchcore/errors.h"

namespace matchcore {
namespace {

constexpr std::pair<Variant, std::string_view> kVariantNames[] = {
    {Variant::kAssignment, "assignment"},
    {Variant::kGeneralMatching, "general-matching"},
    {Variant::kBUniform, "b-uniform"},
    {Variant::kBUnconstrained, "b-unconstrained"},
    {Variant::kBConstrained, "b-constrained"},
    {Variant::kBGeneral, "b-general"},
};

std::vector<Coalition> EnumerateCoalitions(const GameInstance& game, int cap,
                                           bool connected_only) {
  const GameIndex index(game);
  const int n = static_cast<int>(index.ids.size());
  if (n > cap) throw CapExceeded("coalition enumeration", cap, n);
  std::vector<Coalition> out;
  for (VertexMask mask = 1; mask < (VertexMask{1} << n); ++mask) {
    if (connected_only && Components(index, mask).size() != 1) continue;
    std::vector<std::string> members;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) members.push_back(index.ids[v]);
    }
    out.push_back(Coalition::Of(std::move(members)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string_view VariantName(Variant variant) {
  for (const auto& [v, name] : kVariantNames) {
    if (v == variant) return name;
  }
  return "unknown";
}

std::optional<Variant> ParseVariant(std::string_view name) {
  for (const auto& [v, n] : kVariantNames) {
    if (n == name) return v;
  }
  return std::nullopt;
}

std::vector<std::string> GameInstance::Vertices() const {
  std::vector<std::string> all = left;
  all.insert(all.end(), right.begin(), right.end());
  return all;
}

std::int64_t GameInstance::LowerBound(const std::string& vertex) const {
  if (variant != Variant::kBGeneral) return 0;
  const auto it = vertex_lower.find(vertex);
  return it == vertex_lower.end() ? 0 : it->second;
}

std::int64_t GameInstance::UpperBound(const std::string& vertex) const {
  if (variant == Variant::kAssignment || variant == Variant::kGeneralMatching) {
    return 1;
  }
  const auto it = vertex_upper.find(vertex);
  return it == vertex_upper.end() ? 1 : it->second;
}

std::int64_t GameInstance::EdgeLower(const Edge& e) const {
  if (variant != Variant::kBGeneral) return 0;
  return e.lower.value_or(0);
}

std::int64_t GameInstance::EdgeCap(const Edge& e) const {
  const std::int64_t ends =
      std::min(UpperBound(e.first), UpperBound(e.second));
  switch (variant) {
    case Variant::kAssignment:
    case Variant::kGeneralMatching:
    case Variant::kBConstrained:
      return std::min<std::int64_t>(1, ends);
    case Variant::kBUniform:
    case Variant::kBUnconstrained:
      return ends;
    case Variant::kBGeneral:
      return std::min(e.upper.value_or(1), ends);
  }
  return ends;
}

std::string EdgeLabel(const Edge& e) {
  return "(" + e.first + "," + e.second + ")";
}

ValidationReport ValidateGame(const GameInstance& game) {
  ValidationReport report;
  auto flag = [&report](std::string code, std::string subject) {
    report.violations.push_back({std::move(code), std::move(subject)});
  };

  const bool bipartite = IsBipartite(game.variant);
  if (!bipartite && !game.left.empty()) {
    flag("left side must be empty for general-matching", game.left.front());
  }

  std::map<std::string, bool> side;  // true = left
  for (const auto& id : game.left) {
    if (!side.emplace(id, true).second) flag("duplicate vertex", id);
  }
  for (const auto& id : game.right) {
    if (!side.emplace(id, false).second) flag("duplicate vertex", id);
  }

  std::set<std::pair<std::string, std::string>> seen;
  for (const Edge& e : game.edges) {
    const std::string label = EdgeLabel(e);
    if (e.weight.Sign() <= 0) flag("non-positive weight", label);
    const auto a = side.find(e.first);
    const auto b = side.find(e.second);
    if (a == side.end()) flag("unknown endpoint", e.first + " in " + label);
    if (b == side.end()) flag("unknown endpoint", e.second + " in " + label);
    if (e.first == e.second) flag("self-loop", label);
    if (bipartite && a != side.end() && b != side.end()) {
      if (!a->second || b->second) flag("edge not across bipartition", label);
    }
    auto key = std::minmax(e.first, e.second);
    if (!seen.emplace(key.first, key.second).second) {
      flag("parallel edge", label);
    }

    const bool general = game.variant == Variant::kBGeneral;
    if (e.lower && !general) flag("edge lower bound not allowed", label);
    if (e.upper) {
      if (general || game.variant == Variant::kBConstrained) {
        if (*e.upper < 1) flag("non-positive edge bound", label);
        if (game.variant == Variant::kBConstrained && *e.upper != 1) {
          flag("constrained edge bound must be 1", label);
        }
      } else {
        flag("edge upper bound not allowed", label);
      }
    }
    if (e.lower && *e.lower < 0) flag("negative edge lower bound", label);
    if (general && game.EdgeLower(e) > e.upper.value_or(1)) {
      flag("edge bound order", label);
    }
  }

  for (const auto& [id, b] : game.vertex_upper) {
    if (!side.contains(id)) flag("unknown vertex", id);
    if (b < 1) flag("non-positive vertex bound", id);
    if ((game.variant == Variant::kAssignment ||
         game.variant == Variant::kGeneralMatching) &&
        b != 1) {
      flag("vertex bound must be 1", id);
    }
  }
  for (const auto& [id, a] : game.vertex_lower) {
    if (!side.contains(id)) flag("unknown vertex", id);
    if (game.variant != Variant::kBGeneral) {
      flag("vertex lower bound not allowed", id);
    }
    if (a < 0) flag("negative vertex lower bound", id);
  }
  if (game.variant == Variant::kBGeneral) {
    for (const auto& id : game.Vertices()) {
      if (game.LowerBound(id) > game.UpperBound(id)) {
        flag("vertex bound order", id);
      }
    }
  }
  if (game.variant == Variant::kBUniform) {
    const auto ids = game.Vertices();
    for (const auto& id : ids) {
      if (game.UpperBound(id) != game.UpperBound(ids.front())) {
        flag("non-uniform vertex bound", id);
      }
    }
  }
  return report;
}

Coalition Coalition::Of(std::vector<std::string> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return Coalition{std::move(ids)};
}

bool Coalition::Contains(const std::string& id) const {
  return std::binary_search(members.begin(), members.end(), id);
}

std::string CoalitionLabel(const Coalition& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    if (i) out += ",";
    out += c.members[i];
  }
  return out + "}";
}

GameInstance InduceSubgame(const GameInstance& game,
                           const Coalition& coalition) {
  const auto all = game.Vertices();
  for (const auto& id : coalition.members) {
    if (std::find(all.begin(), all.end(), id) == all.end()) {
      throw InputError("coalition member '" + id + "' is not a vertex");
    }
  }
  GameInstance sub = game;
  auto keep = [&coalition](std::vector<std::string>& ids) {
    std::erase_if(ids, [&](const std::string& id) {
      return !coalition.Contains(id);
    });
  };
  keep(sub.left);
  keep(sub.right);
  std::erase_if(sub.edges, [&](const Edge& e) {
    return !coalition.Contains(e.first) || !coalition.Contains(e.second);
  });
  std::erase_if(sub.vertex_lower,
                [&](const auto& kv) { return !coalition.Contains(kv.first); });
  std::erase_if(sub.vertex_upper,
                [&](const auto& kv) { return !coalition.Contains(kv.first); });
  return sub;
}

std::vector<Coalition> ConnectedCoalitions(const GameInstance& game, int cap) {
  return EnumerateCoalitions(game, cap, /*connected_only=*/true);
}

std::vector<Coalition> AllCoalitions(const GameInstance& game, int cap) {
  return EnumerateCoalitions(game, cap, /*connected_only=*/false);
}

GameIndex::GameIndex(const GameInstance& game)
    : variant(game.variant), ids(game.Vertices()) {
  const int n = static_cast<int>(ids.size());
  on_left.assign(n, false);
  incident.resize(n);
  for (int v = 0; v < n; ++v) {
    position.emplace(ids[v], v);
    on_left[v] = v < static_cast<int>(game.left.size());
    lower.push_back(game.LowerBound(ids[v]));
    upper.push_back(game.UpperBound(ids[v]));
  }
  for (const Edge& e : game.edges) {
    const int a = VertexOf(e.first);
    const int b = VertexOf(e.second);
    if (a < 0 || b < 0) throw InputError("edge " + EdgeLabel(e) + " has an unknown endpoint");
    const int k = static_cast<int>(endpoints.size());
    endpoints.emplace_back(a, b);
    weight.push_back(e.weight);
    edge_lower.push_back(game.EdgeLower(e));
    edge_cap.push_back(game.EdgeCap(e));
    incident[a].push_back(k);
    incident[b].push_back(k);
  }
}

int GameIndex::VertexOf(const std::string& id) const {
  const auto it = position.find(id);
  return it == position.end() ? -1 : it->second;
}

int GameIndex::EdgeOf(const std::string& a, const std::string& b) const {
  const int x = VertexOf(a);
  const int y = VertexOf(b);
  if (x < 0 || y < 0) return -1;
  for (int e : incident[x]) {
    const auto [p, q] = endpoints[e];
    if ((p == x && q == y) || (p == y && q == x)) return e;
  }
  return -1;
}

std::vector<VertexMask> Components(const GameIndex& index, VertexMask mask) {
  std::vector<VertexMask> out;
  VertexMask unseen = mask;
  while (unseen) {
    const int start = __builtin_ctz(unseen);
    VertexMask comp = VertexMask{1} << start;
    std::vector<int> stack = {start};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int e : index.incident[v]) {
        const auto [a, b] = index.endpoints[e];
        const int w = a == v ? b : a;
        const VertexMask bit = VertexMask{1} << w;
        if ((mask & bit) && !(comp & bit)) {
          comp |= bit;
          stack.push_back(w);
        }
      }
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

}  // namespace matchcore
