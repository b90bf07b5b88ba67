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

// Command-line driver: matchcore <command> --game <path> [options].

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "matchcore/commands.h"
#include "matchcore/errors.h"
#include "matchcore/game_io.h"

namespace {

int Emit(const matchcore::CommandResult& result, const std::string& format,
         const std::string& out_path) {
  const std::string text = format == "table"
                               ? matchcore::RenderTable(result.report)
                               : matchcore::RenderJson(result.report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return matchcore::kExitInputError;
    }
    out << text;
  }
  if (result.report.contains("error")) {
    std::cerr << "error: " << result.report["error"].get<std::string>() << "\n";
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact core analysis of matching games"};
  app.require_subcommand(1, 1);

  std::string game_path;
  std::string imputation;
  std::string out_path;
  std::string format = "json";
  std::string data_dir = MATCHCORE_DATA_DIR;
  int cap = matchcore::kDefaultCoalitionCap;
  int multiplicity = matchcore::kDefaultMultiplicityCap;
  unsigned seed = 1;
  int draws = 20;
  bool pin = false;

  for (const auto& name : matchcore::CommandNames()) {
    CLI::App* sub = app.add_subcommand(name, "run the " + name + " analysis");
    if (name == "examples") {
      sub->add_option("--data-dir", data_dir, "bundled instance directory");
      sub->add_flag("--pin", pin, "rewrite the expected reports");
    } else {
      sub->add_option("--game", game_path, "game file")->required();
    }
    if (name == "check" || name == "dual-image") {
      sub->add_option("--imputation", imputation, "profits v1,v2,...")
          ->required();
    }
    sub->add_option("--cap", cap, "max vertices for coalition enumeration");
    sub->add_option("--multiplicity-cap", multiplicity,
                    "max total b budget for matching enumeration");
    sub->add_option("--seed", seed, "seed for random objectives");
    sub->add_option("--draws", draws, "random objectives for the system command");
    sub->add_option("--out", out_path, "write the report here");
    sub->add_option("--format", format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? matchcore::kExitOk : matchcore::kExitInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  matchcore::CommandOptions options;
  options.caps.coalitions = cap;
  options.caps.multiplicity = multiplicity;
  options.seed = seed;
  options.draws = draws;
  options.data_dir = data_dir;
  options.pin = pin;

  std::optional<matchcore::GameInstance> game;
  try {
    if (!game_path.empty()) game = matchcore::ReadGameFile(game_path);
    if (!imputation.empty()) {
      options.imputation = matchcore::ParseVector(imputation);
    }
  } catch (const matchcore::InputError& e) {
    matchcore::CommandResult failed;
    failed.report["command"] = command;
    failed.report["error"] = e.what();
    failed.exit_code = matchcore::kExitInputError;
    return Emit(failed, format, out_path);
  }

  return Emit(matchcore::RunCommand(command, game ? &*game : nullptr, options),
              format, out_path);
}
