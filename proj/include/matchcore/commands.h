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

#ifndef MATCHCORE_COMMANDS_H_
#define MATCHCORE_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "matchcore/core_analysis.h"
#include "matchcore/game.h"
#include "matchcore/rational.h"

namespace matchcore {

using Report = nlohmann::ordered_json;

// Process exit codes shared by every command.
enum ExitCode : int {
  kExitOk = 0,
  kExitFinding = 1,
  kExitInputError = 2,
  kExitCapExceeded = 3,
};

struct CommandOptions {
  std::optional<std::vector<Rational>> imputation;
  Caps caps;
  std::uint32_t seed = 1;
  int draws = 20;  // random objectives for the system command
  std::filesystem::path data_dir = MATCHCORE_DATA_DIR;
  bool pin = false;  // examples: rewrite the expected files
};

struct CommandResult {
  Report report;
  int exit_code = kExitOk;
};

// The commands accepted by RunCommand, in help order.
const std::vector<std::string>& CommandNames();

// Runs one analysis command. The game is required by every command except
// "examples". Input errors and exceeded caps are turned into a report with
// an "error" field and the matching exit code; nothing is thrown.
CommandResult RunCommand(std::string_view name, const GameInstance* game,
                         const CommandOptions& options);

// The fixed set of sections pinned for a bundled instance.
Report InstanceReport(const GameInstance& game, const CommandOptions& options);

// Parses "v1,v2,..." into exact rationals. Throws InputError.
std::vector<Rational> ParseVector(std::string_view text);

std::string RenderJson(const Report& report);
// Flattens the report into aligned "path  value" rows.
std::string RenderTable(const Report& report);

}  // namespace matchcore

#endif  // MATCHCORE_COMMANDS_H_
