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

#ifndef MATCHCORE_LP_H_
#define MATCHCORE_LP_H_

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "matchcore/game.h"
#include "matchcore/rational.h"

namespace matchcore {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };
enum class Sense { kMaximize, kMinimize };

struct Constraint {
  std::string name;
  std::vector<Rational> coefficients;  // One slot per variable.
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

struct LinearProgram {
  std::vector<std::string> variables;
  std::vector<Rational> objective;
  Sense sense = Sense::kMaximize;
  std::vector<Constraint> constraints;
  std::vector<bool> nonnegative;

  int AddVariable(std::string name, Rational cost = 0, bool nonneg = true);
  // Pads `coefficients` with zeros up to the current variable count.
  void AddConstraint(std::string name, std::vector<Rational> coefficients,
                     Relation relation, Rational rhs);
  int VariableIndex(const std::string& name) const;  // -1 when absent.
  std::size_t num_variables() const { return variables.size(); }
};

// Throws InputError when a row has the wrong width, names collide, or the
// objective/nonnegativity vectors do not match the variable list.
void CheckWellFormed(const LinearProgram& lp);

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };
std::string_view LpStatusName(LpStatus status);

struct LPSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> values;
  Rational objective_value;
  bool is_vertex = false;

  bool optimal() const { return status == LpStatus::kOptimal; }
};

Rational RowActivity(const Constraint& row, std::span<const Rational> x);
Rational ObjectiveValue(const LinearProgram& lp, std::span<const Rational> x);
bool RowSatisfied(const Constraint& row, std::span<const Rational> x);
bool IsFeasible(const LinearProgram& lp, std::span<const Rational> x);

// Exact two-phase primal simplex on a dense tableau. Entering and leaving
// variables follow Bland's rule (lowest index), so degenerate problems
// terminate and identical inputs give identical basic solutions.
LPSolution SolveLp(const LinearProgram& lp);

// Optimizes `secondary` over {x feasible for lp : objective(x) ==
// optimal_value}. Status is kInfeasible when optimal_value is not attained.
LPSolution SolveOverOptimalFace(const LinearProgram& lp,
                                const Rational& optimal_value,
                                std::span<const Rational> secondary,
                                Sense sense);

// Solves `lp` once and then answers many secondary-objective queries over
// its optimal face. Columns with a nonzero reduced cost at the optimal basis
// are pinned to zero, which leaves exactly the optimal face; each query then
// runs phase two from the stored basis. Agrees with SolveOverOptimalFace.
class OptimalFace {
 public:
  explicit OptimalFace(const LinearProgram& lp);
  ~OptimalFace();
  OptimalFace(OptimalFace&&) noexcept;
  OptimalFace& operator=(OptimalFace&&) noexcept;

  const LPSolution& base() const { return base_; }
  LPSolution Optimize(std::span<const Rational> secondary, Sense sense) const;

 private:
  struct State;
  LPSolution base_;
  std::unique_ptr<State> state_;
};

// ---- Game programs --------------------------------------------------------

// Primal b-matching LP of the game's variant: one x variable per edge, rows
// for the left vertices, then the right vertices, then per-edge bounds.
LinearProgram BuildPrimalLp(const GameInstance& game);

// Dual of BuildPrimalLp (minimize). Variables are ordered: vertex upper-bound
// duals (u, v or beta), vertex lower-bound duals (alpha, b-general only),
// edge upper-bound duals (z or delta), edge lower-bound duals (gamma). One
// covering row per edge.
LinearProgram BuildDualLp(const GameInstance& game);

// Dual values aligned with the game's vertex and edge order. Entries a
// variant does not have are zero.
struct DualSolution {
  std::vector<Rational> vertex_upper;  // u_i, v_j, beta
  std::vector<Rational> vertex_lower;  // alpha
  std::vector<Rational> edge_upper;    // z_ij, delta
  std::vector<Rational> edge_lower;    // gamma

  friend bool operator==(const DualSolution&, const DualSolution&) = default;
};

DualSolution DualFromValues(const GameInstance& game,
                            std::span<const Rational> values);
std::vector<Rational> DualToValues(const GameInstance& game,
                                   const DualSolution& dual);

// Optimal vertex of the dual LP. Throws std::logic_error if it is not
// optimal, which cannot happen for a valid game.
DualSolution SolveDual(const GameInstance& game);

struct DualityReport {
  bool primal_feasible = false;
  bool dual_feasible = false;
  bool objectives_equal = false;
  Rational primal_objective;
  Rational dual_objective;
  std::vector<std::size_t> tight_primal_rows;
  std::vector<std::size_t> tight_dual_rows;
  std::vector<Rational> dual_row_slack;  // activity - rhs, per covering row
};

// Exact feasibility and complementary-slackness bookkeeping for a primal
// point `x` and dual point `y` of `game`. Throws InputError on a dimension
// mismatch.
DualityReport VerifyDuality(const GameInstance& game,
                            std::span<const Rational> x,
                            std::span<const Rational> y);

}  // namespace matchcore

#endif  // MATCHCORE_LP_H_
