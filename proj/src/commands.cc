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

#include "matchcore/commands.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "matchcore/bmatching.h"
#include "matchcore/errors.h"
#include "matchcore/game_io.h"
#include "matchcore/lp.h"
#include "matchcore/matching.h"

namespace matchcore {
namespace {

using Json = Report;

std::string Str(const Rational& r) { return r.ToString(); }

Json Profits(const std::vector<std::string>& ids,
             const std::vector<Rational>& values) {
  Json out = Json::object();
  for (std::size_t i = 0; i < ids.size(); ++i) out[ids[i]] = Str(values[i]);
  return out;
}

Json Strings(const std::vector<std::string>& items) {
  Json out = Json::array();
  for (const auto& s : items) out.push_back(s);
  return out;
}

Json Verdict(const CoreVerdict& v) {
  Json out;
  out["in_core"] = v.in_core;
  if (!v.in_core) {
    out["reason"] = v.reason;
    if (v.witness) {
      out["witness"] = CoalitionLabel(*v.witness);
      out["witness_worth"] = Str(v.witness_worth);
      out["witness_profit"] = Str(v.witness_profit);
    }
  }
  return out;
}

std::string MatchingLabel(const GameInstance& game, const MatchingVector& x) {
  std::string out = "{";
  bool first = true;
  for (std::size_t e = 0; e < game.edges.size(); ++e) {
    if (x.multiplicity[e].IsZero()) continue;
    if (!first) out += ",";
    first = false;
    out += EdgeLabel(game.edges[e]);
    if (x.multiplicity[e] != Rational(1)) out += "x" + Str(x.multiplicity[e]);
  }
  return out + "}";
}

Imputation RequireImputation(const GameInstance& game,
                             const CommandOptions& options) {
  if (!options.imputation) throw InputError("--imputation is required");
  const auto n = game.Vertices().size();
  if (options.imputation->size() != n) {
    throw InputError("--imputation has " +
                     std::to_string(options.imputation->size()) +
                     " entries, the game has " + std::to_string(n) +
                     " vertices");
  }
  return Imputation{*options.imputation};
}

bool IsUnit(const GameInstance& game) {
  return game.variant == Variant::kAssignment ||
         game.variant == Variant::kGeneralMatching;
}

// ---- Sections -------------------------------------------------------------

// Each section returns its body and may raise the finding flag.
struct Section {
  Json body;
  bool finding = false;
};

Section WorthSection(const GameInstance& game, const CommandOptions& o) {
  const Optima optima = BruteForceOptima(game, o.caps.multiplicity);
  Section s;
  if (!optima.feasible) {
    s.body["worth"] = nullptr;
    s.body["feasible"] = false;
    s.finding = true;
    return s;
  }
  s.body["worth"] = Str(optima.max_weight);
  s.body["optimal_matchings"] = optima.matchings.size();
  Json list = Json::array();
  for (const auto& m : optima.matchings) list.push_back(MatchingLabel(game, m));
  s.body["matchings"] = list;
  return s;
}

Section DualSection(const GameInstance& game, const CommandOptions&) {
  const LinearProgram lp = BuildDualLp(game);
  const LPSolution sol = SolveLp(lp);
  Section s;
  s.body["status"] = std::string(LpStatusName(sol.status));
  if (!sol.optimal()) {
    s.finding = true;
    return s;
  }
  s.body["objective"] = Str(sol.objective_value);
  Json values = Json::object();
  for (std::size_t k = 0; k < lp.variables.size(); ++k) {
    values[lp.variables[k]] = Str(sol.values[k]);
  }
  s.body["values"] = values;
  return s;
}

Section ConcurrencySection(const GameInstance& game, const CommandOptions& o) {
  const WorthReport w = CheckConcurrency(game, o.caps);
  Section s;
  s.body["q_integral"] = Str(w.q_integral);
  s.body["q_fractional"] = Str(w.q_fractional);
  s.body["concurrent"] = w.concurrent;
  if (IsUnit(game)) {
    s.body["core_empty"] = !w.concurrent;
    s.body["summary"] =
        w.concurrent ? "core nonempty: Q_i = Q_f = " + Str(w.q_integral)
                     : "core empty: Q_i = " + Str(w.q_integral) +
                           ", Q_f = " + Str(w.q_fractional);
    s.finding = !w.concurrent;
  }
  return s;
}

Section ImputationSection(const GameInstance& game, const CommandOptions& o) {
  const auto ids = game.Vertices();
  Section s;
  if (IsUnit(game)) {
    if (!CheckConcurrency(game, o.caps).concurrent) {
      s.body["core_empty"] = true;
      s.finding = true;
      return s;
    }
    const Imputation imp = CoreImputationFromDual(game, SolveDual(game));
    s.body["rule"] = "dual";
    s.body["profits"] = Profits(ids, imp.profits);
    const CoreVerdict v = IsCoreImputation(game, imp, o.caps);
    s.body["verdict"] = Verdict(v);
    s.finding = !v.in_core;
    return s;
  }
  if (!BruteForceOptima(game, o.caps.multiplicity).feasible) {
    s.body["feasible"] = false;
    s.finding = true;
    return s;
  }
  const DualSolution y = SolveDual(game);
  DerivedImputation d;
  switch (game.variant) {
    case Variant::kBUniform:
      s.body["rule"] = "uniform";
      d = UniformImputationFromDual(game, y, o.caps);
      break;
    case Variant::kBUnconstrained:
      s.body["rule"] = "scaled";
      d = UnconImputationFromDual(game, y, o.caps);
      break;
    case Variant::kBConstrained:
      s.body["rule"] = "split-balanced";
      d = ConImputationFromDual(game, y, SplitScheme::Balanced(y), o.caps);
      break;
    default:
      s.body["rule"] = "split-balanced";
      d = GenImputationFromDual(game, y, SplitScheme::Balanced(y), o.caps);
      break;
  }
  s.body["profits"] = Profits(ids, d.imputation.profits);
  s.body["verdict"] = Verdict(d.verdict);
  s.body["negative_entries"] = Strings(d.negative_entries);
  s.finding = !d.verdict.in_core;
  return s;
}

Section ClassifySection(const GameInstance& game, const CommandOptions& o) {
  const Classification c = ClassifyAll(game, o.caps.multiplicity);
  const auto ids = game.Vertices();
  Section s;
  s.body["optimum_count"] = c.optimum_count;
  Json vertices = Json::object();
  for (std::size_t v = 0; v < ids.size(); ++v) {
    vertices[ids[v]] = std::string(LabelName(c.vertices[v]));
  }
  Json edges = Json::object();
  for (std::size_t e = 0; e < game.edges.size(); ++e) {
    edges[EdgeLabel(game.edges[e])] = std::string(LabelName(c.edges[e]));
  }
  s.body["vertices"] = vertices;
  s.body["edges"] = edges;
  return s;
}

Section PaymentsSection(const GameInstance& game, const CommandOptions& o) {
  const PaymentReport p = Payments(game, o.caps);
  Section s;
  s.body["core_empty"] = p.core_empty;
  if (p.core_empty) {
    s.finding = true;
    return s;
  }
  const auto ids = game.Vertices();
  Json vertices = Json::object();
  for (std::size_t v = 0; v < ids.size(); ++v) {
    Json row;
    row["paid_sometimes"] = p.vertices[v].flag;
    row["max_profit"] = Str(p.vertices[v].extreme);
    vertices[ids[v]] = row;
  }
  Json edges = Json::object();
  for (std::size_t e = 0; e < game.edges.size(); ++e) {
    Json row;
    row["always_fairly_paid"] = p.edges[e].flag;
    row["max_slack"] = Str(p.edges[e].extreme);
    edges[EdgeLabel(game.edges[e])] = row;
  }
  s.body["vertices"] = vertices;
  s.body["edges"] = edges;
  return s;
}

Section AntipodalSection(const GameInstance& game, const CommandOptions&) {
  const Antipodes a = AntipodalImputations(game);
  const auto ids = game.Vertices();
  Section s;
  s.body["left_optimal"] = Profits(ids, a.left_optimal.profits);
  s.body["right_optimal"] = Profits(ids, a.right_optimal.profits);
  return s;
}

Section DegeneracySection(const GameInstance& game, const CommandOptions& o) {
  const DegeneracyReport d = Degeneracy(game, o.caps);
  Section s;
  s.body["degenerate"] = d.degenerate;
  s.body["optimum_count"] = d.optimum_count;
  s.body["viable_vertices"] = Strings(d.viable_vertices);
  s.body["viable_edges"] = Strings(d.viable_edges);
  if (d.never_paid_vertices) {
    s.body["never_paid_vertices"] = Strings(*d.never_paid_vertices);
  }
  if (d.always_fair_edges) {
    s.body["always_fair_edges"] = Strings(*d.always_fair_edges);
  }
  return s;
}

std::string_view RelationSymbol(Relation r) {
  switch (r) {
    case Relation::kLessEqual:
      return "<=";
    case Relation::kGreaterEqual:
      return ">=";
    case Relation::kEqual:
      return "=";
  }
  return "?";
}

Section SystemSection(const GameInstance& game, const CommandOptions& o) {
  const CoalitionSystem system = BuildCoalitionSystem(game, o.caps);
  Section s;
  s.body["variables"] = Strings(system.variables);
  Json rows = Json::array();
  for (const auto& row : system.rows) {
    rows.push_back(CoalitionLabel(row.coalition) + " " +
                   std::string(RelationSymbol(row.relation)) + " " +
                   Str(row.rhs));
  }
  s.body["rows"] = rows;
  s.body["seed"] = o.seed;
  s.body["draws"] = o.draws;
  const auto vertices = SampleSystemVertices(system, o.seed, o.draws);
  s.body["core_empty"] = vertices.empty();
  Json sampled = Json::array();
  for (const auto& v : vertices) {
    Json entry;
    entry["profits"] = Profits(system.variables, v.profits);
    entry["in_dual_image"] = InDualImage(game, v);
    sampled.push_back(entry);
  }
  s.body["sampled_vertices"] = sampled;
  s.finding = vertices.empty();
  return s;
}

Section CheckSection(const GameInstance& game, const CommandOptions& o) {
  const Imputation imp = RequireImputation(game, o);
  const CoreVerdict v = IsCoreImputation(game, imp, o.caps);
  Section s;
  s.body["imputation"] = Profits(game.Vertices(), imp.profits);
  s.body["verdict"] = Verdict(v);
  s.finding = !v.in_core;
  return s;
}

Section DualImageSection(const GameInstance& game, const CommandOptions& o) {
  const Imputation imp = RequireImputation(game, o);
  Section s;
  s.body["imputation"] = Profits(game.Vertices(), imp.profits);
  s.body["verdict"] = Verdict(IsCoreImputation(game, imp, o.caps));
  const bool image = InDualImage(game, imp);
  s.body["in_dual_image"] = image;
  s.finding = !image;
  return s;
}

using SectionFn = std::function<Section(const GameInstance&, const CommandOptions&)>;

const std::vector<std::pair<std::string, SectionFn>>& GameCommands() {
  static const auto* commands = new std::vector<std::pair<std::string, SectionFn>>{
      {"worth", WorthSection},
      {"dual", DualSection},
      {"imputation", ImputationSection},
      {"classify", ClassifySection},
      {"payments", PaymentsSection},
      {"concurrency", ConcurrencySection},
      {"antipodal", AntipodalSection},
      {"degeneracy", DegeneracySection},
      {"system", SystemSection},
      {"check", CheckSection},
      {"dual-image", DualImageSection},
  };
  return *commands;
}

const SectionFn* FindCommand(std::string_view name) {
  for (const auto& [n, fn] : GameCommands()) {
    if (n == name) return &fn;
  }
  return nullptr;
}

// Sections pinned for each bundled instance, in report order.
std::vector<std::string> ProfileFor(Variant variant) {
  switch (variant) {
    case Variant::kAssignment:
      return {"worth", "dual", "imputation", "classify", "payments",
              "antipodal", "degeneracy"};
    case Variant::kGeneralMatching:
      return {"worth", "concurrency", "imputation", "classify", "payments",
              "degeneracy"};
    default:
      return {"worth", "concurrency", "dual", "imputation", "classify",
              "degeneracy", "system"};
  }
}

Json Header(std::string_view command, const GameInstance* game,
            const CommandOptions& o) {
  Json out;
  out["command"] = std::string(command);
  if (game) {
    out["game"] = game->name;
    out["variant"] = std::string(VariantName(game->variant));
  }
  out["caps"] = {{"coalitions", o.caps.coalitions},
                 {"multiplicity", o.caps.multiplicity}};
  return out;
}

std::vector<std::filesystem::path> InstanceFiles(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw InputError("instance directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".game") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::string ReadText(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

CommandResult RunExamples(const CommandOptions& o) {
  CommandResult result;
  result.report = Header("examples", nullptr, o);
  Json instances = Json::array();
  int mismatches = 0;
  for (const auto& path : InstanceFiles(o.data_dir)) {
    const GameInstance game = ReadGameFile(path);
    const std::string actual = RenderJson(InstanceReport(game, o));
    auto expected_path = path;
    expected_path.replace_extension(".expected");
    if (o.pin) {
      std::ofstream(expected_path, std::ios::binary) << actual;
    }
    const bool match = ReadText(expected_path) == actual;
    if (!match) ++mismatches;
    Json entry;
    entry["instance"] = game.name;
    entry["file"] = path.filename().string();
    entry["provenance"] = game.provenance;
    entry["match"] = match;
    entry["report"] = Json::parse(actual);
    instances.push_back(entry);
  }
  result.report["instances"] = instances;
  result.report["mismatches"] = mismatches;
  result.exit_code = mismatches == 0 ? kExitOk : kExitFinding;
  return result;
}

void Flatten(const Json& node, const std::string& path,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      Flatten(value, path.empty() ? key : path + "." + key, rows);
    }
  } else if (node.is_array()) {
    if (node.empty()) rows.emplace_back(path, "[]");
    std::size_t k = 0;
    for (const auto& value : node) {
      Flatten(value, path + "[" + std::to_string(k++) + "]", rows);
    }
  } else if (node.is_string()) {
    rows.emplace_back(path, node.get<std::string>());
  } else {
    rows.emplace_back(path, node.dump());
  }
}

}  // namespace

const std::vector<std::string>& CommandNames() {
  static const auto* names = [] {
    auto* out = new std::vector<std::string>;
    for (const auto& [n, fn] : GameCommands()) out->push_back(n);
    out->push_back("examples");
    return out;
  }();
  return *names;
}

Report InstanceReport(const GameInstance& game, const CommandOptions& options) {
  Json out;
  out["instance"] = game.name;
  out["variant"] = std::string(VariantName(game.variant));
  out["caps"] = {{"coalitions", options.caps.coalitions},
                 {"multiplicity", options.caps.multiplicity}};
  for (const auto& name : ProfileFor(game.variant)) {
    out[name] = (*FindCommand(name))(game, options).body;
  }
  return out;
}

CommandResult RunCommand(std::string_view name, const GameInstance* game,
                         const CommandOptions& options) {
  CommandResult result;
  result.report = Header(name, game, options);
  try {
    if (name == "examples") return RunExamples(options);
    const SectionFn* fn = FindCommand(name);
    if (fn == nullptr) {
      throw InputError("unknown command '" + std::string(name) + "'");
    }
    if (game == nullptr) throw InputError("--game is required");
    Section s = (*fn)(*game, options);
    result.report[std::string(name)] = std::move(s.body);
    result.exit_code = s.finding ? kExitFinding : kExitOk;
  } catch (const CapExceeded& e) {
    result.report["error"] = e.what();
    result.report["cap"] = e.cap();
    result.exit_code = kExitCapExceeded;
  } catch (const InputError& e) {
    result.report["error"] = e.what();
    result.exit_code = kExitInputError;
  }
  return result;
}

std::vector<Rational> ParseVector(std::string_view text) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = std::min(text.find(',', pos), text.size());
    std::string item(text.substr(pos, comma - pos));
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    try {
      out.push_back(Rational::Parse(item));
    } catch (const std::exception& e) {
      throw InputError("entry " + std::to_string(out.size() + 1) + " of '" +
                       std::string(text) + "': " + e.what());
    }
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return out;
}

std::string RenderJson(const Report& report) { return report.dump(2) + "\n"; }

std::string RenderTable(const Report& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  Flatten(report, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) {
    out << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  }
  return out.str();
}

}  // namespace matchcore
