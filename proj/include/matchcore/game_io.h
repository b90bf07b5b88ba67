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

#ifndef MATCHCORE_GAME_IO_H_
#define MATCHCORE_GAME_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "matchcore/game.h"

namespace matchcore {

// Game files are line oriented "key = value" documents; '#' starts a
// comment. Keys:
//   name = <identifier>             optional
//   provenance = <free text>        optional
//   variant = assignment | general-matching | b-uniform | b-unconstrained |
//             b-constrained | b-general
//   left = <ids...>                 bipartite variants
//   right = <ids...>                bipartite variants
//   vertices = <ids...>             general-matching
//   b = <id|*> <n>                  vertex upper bound, '*' for every vertex
//   a = <id|*> <n>                  vertex lower bound, b-general only
//   edge = <id> <id> <weight> [c=<n>] [d=<n>]
// Omitted bounds take the variant defaults (a = 0, b = 1, c = 0, d = 1).
// Weights are exact: integers, p/q or decimals.

// Throws InputError naming the line on malformed text, and forwards every
// ValidateGame violation.
GameInstance ParseGame(std::string_view text);
GameInstance ReadGameFile(const std::filesystem::path& path);

// Canonical text form; ParseGame(RenderGame(g)) == g for valid games.
std::string RenderGame(const GameInstance& game);

}  // namespace matchcore

#endif  // MATCHCORE_GAME_IO_H_
