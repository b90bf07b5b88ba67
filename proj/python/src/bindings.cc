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

// Python bindings: games as parsed text documents, analyses as JSON reports.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "matchcore/commands.h"
#include "matchcore/errors.h"
#include "matchcore/game_io.h"

namespace py = pybind11;

namespace matchcore {
namespace {

std::tuple<std::string, int> Run(const std::string& command,
                                 const GameInstance* game,
                                 const std::optional<std::string>& imputation,
                                 int coalition_cap, int multiplicity_cap,
                                 std::uint32_t seed, int draws,
                                 const std::optional<std::string>& data_dir) {
  CommandOptions options;
  options.caps.coalitions = coalition_cap;
  options.caps.multiplicity = multiplicity_cap;
  options.seed = seed;
  options.draws = draws;
  if (data_dir) options.data_dir = *data_dir;
  if (imputation) options.imputation = ParseVector(*imputation);
  CommandResult result;
  {
    py::gil_scoped_release release;
    result = RunCommand(command, game, options);
  }
  return {RenderJson(result.report), result.exit_code};
}

}  // namespace
}  // namespace matchcore

PYBIND11_MODULE(_matchcore, m) {
  using matchcore::GameInstance;
  m.doc() = "Exact core analysis of matching games";

  py::register_exception<matchcore::InputError>(m, "InputError",
                                                PyExc_ValueError);
  py::register_exception<matchcore::CapExceeded>(m, "CapExceeded",
                                                 PyExc_RuntimeError);

  py::class_<GameInstance>(m, "Game")
      .def_static("from_text", &matchcore::ParseGame, py::arg("text"))
      .def_static(
          "from_file",
          [](const std::string& path) { return matchcore::ReadGameFile(path); },
          py::arg("path"))
      .def_readonly("name", &GameInstance::name)
      .def_readonly("provenance", &GameInstance::provenance)
      .def_property_readonly(
          "variant",
          [](const GameInstance& g) {
            return std::string(matchcore::VariantName(g.variant));
          })
      .def_property_readonly("vertices", &GameInstance::Vertices)
      .def_property_readonly(
          "edges",
          [](const GameInstance& g) {
            std::vector<std::tuple<std::string, std::string, std::string>> out;
            for (const auto& e : g.edges) {
              out.emplace_back(e.first, e.second, e.weight.ToString());
            }
            return out;
          })
      .def("render", &matchcore::RenderGame)
      .def("__eq__", [](const GameInstance& a, const GameInstance& b) {
        return a == b;
      })
      .def("__repr__", [](const GameInstance& g) {
        return "<Game " + g.name + " (" +
               std::string(matchcore::VariantName(g.variant)) + ")>";
      });

  m.def(
      "run_command",
      [](const std::string& command, const GameInstance* game,
         const std::optional<std::string>& imputation, int coalition_cap,
         int multiplicity_cap, std::uint32_t seed, int draws,
         const std::optional<std::string>& data_dir) {
        return matchcore::Run(command, game, imputation, coalition_cap,
                              multiplicity_cap, seed, draws, data_dir);
      },
      py::arg("command"), py::arg("game") = nullptr,
      py::arg("imputation") = py::none(),
      py::arg("coalition_cap") = matchcore::kDefaultCoalitionCap,
      py::arg("multiplicity_cap") = matchcore::kDefaultMultiplicityCap,
      py::arg("seed") = 1, py::arg("draws") = 20,
      py::arg("data_dir") = py::none(),
      "Runs one analysis command; returns (report JSON, exit code).");
  m.attr("commands") = matchcore::CommandNames();
}
