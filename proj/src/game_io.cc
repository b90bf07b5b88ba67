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

#include "matchcore/game_io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "matchcore/errors.h"

namespace matchcore {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> Words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

class LineError {
 public:
  explicit LineError(int line) : line_(line) {}

  [[noreturn]] void Fail(const std::string& message) const {
    throw InputError("line " + std::to_string(line_) + ": " + message);
  }

  std::int64_t Integer(const std::string& field, const std::string& text) const {
    std::int64_t value = 0;
    const auto [end, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size()) {
      Fail(field + ": expected an integer, got '" + text + "'");
    }
    return value;
  }

  Rational Weight(const std::string& text) const {
    try {
      return Rational::Parse(text);
    } catch (const std::exception& e) {
      Fail("weight: " + std::string(e.what()));
    }
  }

 private:
  int line_;
};

struct PendingBound {
  int line;
  std::string id;
  std::int64_t value;
};

}  // namespace

GameInstance ParseGame(std::string_view text) {
  GameInstance game;
  bool have_variant = false;
  std::set<std::string> seen_keys;
  std::set<std::pair<std::string, std::string>> seen_edges;
  std::vector<PendingBound> upper, lower;

  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    const LineError at(number);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) at.Fail("expected 'key = value'");
    const std::string key(Trim(line.substr(0, eq)));
    const std::string_view value = Trim(line.substr(eq + 1));
    const auto words = Words(value);

    const bool repeatable = key == "edge" || key == "a" || key == "b";
    if (!repeatable && !seen_keys.insert(key).second) {
      at.Fail("duplicate key '" + key + "'");
    }
    if (key == "name") {
      if (words.size() != 1) at.Fail("name: expected one word");
      game.name = words[0];
    } else if (key == "provenance") {
      game.provenance = std::string(value);
    } else if (key == "variant") {
      const auto v = ParseVariant(value);
      if (!v) at.Fail("variant: unknown '" + std::string(value) + "'");
      game.variant = *v;
      have_variant = true;
    } else if (key == "left") {
      game.left = words;
    } else if (key == "right" || key == "vertices") {
      if (seen_keys.contains("right") && seen_keys.contains("vertices")) {
        at.Fail("use either 'right' or 'vertices', not both");
      }
      game.right = words;
    } else if (key == "a" || key == "b") {
      if (words.size() != 2) at.Fail(key + ": expected '<id|*> <n>'");
      auto& list = key == "a" ? lower : upper;
      list.push_back({number, words[0], at.Integer(key, words[1])});
    } else if (key == "edge") {
      if (words.size() < 3) at.Fail("edge: expected '<id> <id> <weight>'");
      Edge e{words[0], words[1], at.Weight(words[2]), std::nullopt, std::nullopt};
      for (std::size_t k = 3; k < words.size(); ++k) {
        const std::string& w = words[k];
        if (w.starts_with("c=")) {
          if (e.lower) at.Fail("edge: duplicate c=");
          e.lower = at.Integer("c", w.substr(2));
        } else if (w.starts_with("d=")) {
          if (e.upper) at.Fail("edge: duplicate d=");
          e.upper = at.Integer("d", w.substr(2));
        } else {
          at.Fail("edge: unexpected field '" + w + "'");
        }
      }
      const auto key_pair = std::minmax(e.first, e.second);
      if (!seen_edges.emplace(key_pair.first, key_pair.second).second) {
        at.Fail("duplicate edge " + EdgeLabel(e));
      }
      game.edges.push_back(std::move(e));
    } else {
      at.Fail("unknown key '" + key + "'");
    }
  }

  if (!have_variant) throw InputError("missing 'variant'");
  if (seen_keys.contains("vertices") && IsBipartite(game.variant)) {
    throw InputError("'vertices' is only for general-matching; use left/right");
  }
  if (seen_keys.contains("left") && !IsBipartite(game.variant)) {
    throw InputError("general-matching games list 'vertices', not sides");
  }

  const auto ids = game.Vertices();
  auto apply = [&](const std::vector<PendingBound>& list,
                   std::map<std::string, std::int64_t>& target) {
    for (const auto& p : list) {
      if (p.id == "*") {
        for (const auto& id : ids) target[id] = p.value;
      } else {
        if (std::find(ids.begin(), ids.end(), p.id) == ids.end()) {
          LineError(p.line).Fail("unknown vertex '" + p.id + "'");
        }
        target[p.id] = p.value;
      }
    }
  };
  apply(upper, game.vertex_upper);
  apply(lower, game.vertex_lower);

  const auto report = ValidateGame(game);
  if (!report.ok()) {
    std::string message = "invalid game:";
    for (const auto& v : report.violations) message += " [" + v.Message() + "]";
    throw InputError(message);
  }
  return game;
}

GameInstance ReadGameFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return ParseGame(text.str());
  } catch (const InputError& e) {
    throw InputError(path.filename().string() + ": " + e.what());
  }
}

std::string RenderGame(const GameInstance& game) {
  std::ostringstream out;
  if (!game.name.empty()) out << "name = " << game.name << "\n";
  if (!game.provenance.empty()) {
    out << "provenance = " << game.provenance << "\n";
  }
  out << "variant = " << VariantName(game.variant) << "\n";
  auto list = [&out](const char* key, const std::vector<std::string>& ids) {
    out << key << " =";
    for (const auto& id : ids) out << " " << id;
    out << "\n";
  };
  if (IsBipartite(game.variant)) {
    list("left", game.left);
    list("right", game.right);
  } else {
    list("vertices", game.right);
  }
  for (const auto& id : game.Vertices()) {
    if (const auto it = game.vertex_upper.find(id); it != game.vertex_upper.end()) {
      out << "b = " << id << " " << it->second << "\n";
    }
  }
  for (const auto& id : game.Vertices()) {
    if (const auto it = game.vertex_lower.find(id); it != game.vertex_lower.end()) {
      out << "a = " << id << " " << it->second << "\n";
    }
  }
  for (const Edge& e : game.edges) {
    out << "edge = " << e.first << " " << e.second << " " << e.weight.ToString();
    if (e.lower) out << " c=" << *e.lower;
    if (e.upper) out << " d=" << *e.upper;
    out << "\n";
  }
  return out.str();
}

}  // namespace matchcore
