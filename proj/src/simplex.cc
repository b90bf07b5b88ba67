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

#include <algorithm>
#include <stdexcept>

#include "matchcore/errors.h"
#include "matchcore/lp.h"

namespace matchcore {
namespace {

// Dense simplex tableau in maximization form. Row i holds B^-1 A for the
// current basis with the right-hand side in the last column; `reduced`
// holds c_j - c_B B^-1 A_j, and its last entry is minus the objective.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : a_(rows, std::vector<Rational>(cols + 1)),
        reduced_(cols + 1),
        basis_(rows, -1),
        enterable_(cols, true),
        cols_(cols) {}

  Rational& at(int r, int c) { return a_[r][c]; }
  const Rational& at(int r, int c) const { return a_[r][c]; }
  Rational& rhs(int r) { return a_[r][cols_]; }
  const Rational& rhs(int r) const { return a_[r][cols_]; }
  int rows() const { return static_cast<int>(a_.size()); }
  int cols() const { return cols_; }
  std::vector<int>& basis() { return basis_; }
  const std::vector<int>& basis() const { return basis_; }
  std::vector<bool>& enterable() { return enterable_; }
  const Rational& reduced(int c) const { return reduced_[c]; }

  void SetObjective(std::span<const Rational> cost) {
    for (int c = 0; c < cols_; ++c) reduced_[c] = cost[c];
    reduced_[cols_] = 0;
    for (int r = 0; r < rows(); ++r) {
      const Rational& cb = cost[basis_[r]];
      if (cb.IsZero()) continue;
      for (int c = 0; c <= cols_; ++c) {
        if (!a_[r][c].IsZero()) reduced_[c] -= cb * a_[r][c];
      }
    }
  }

  Rational Objective() const { return -reduced_[cols_]; }

  void Pivot(int row, int col) {
    std::vector<Rational>& p = a_[row];
    const Rational inv = p[col].Inverse();
    std::vector<int> nonzero;
    for (int c = 0; c <= cols_; ++c) {
      if (p[c].IsZero()) continue;
      p[c] *= inv;
      nonzero.push_back(c);
    }
    auto eliminate = [&](std::vector<Rational>& target) {
      if (target[col].IsZero()) return;
      const Rational f = target[col];
      for (int c : nonzero) target[c] -= f * p[c];
    };
    for (int r = 0; r < rows(); ++r) {
      if (r != row) eliminate(a_[r]);
    }
    eliminate(reduced_);
    basis_[row] = col;
  }

  // Bland's rule: lowest enterable column with positive reduced cost, then
  // the minimum-ratio row with the lowest basic column on ties.
  LpStatus Run() {
    for (;;) {
      int enter = -1;
      for (int c = 0; c < cols_; ++c) {
        if (enterable_[c] && reduced_[c].Sign() > 0) {
          enter = c;
          break;
        }
      }
      if (enter < 0) return LpStatus::kOptimal;
      int leave = -1;
      Rational best;
      for (int r = 0; r < rows(); ++r) {
        if (a_[r][enter].Sign() <= 0) continue;
        Rational ratio = a_[r][cols_] / a_[r][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave < 0) return LpStatus::kUnbounded;
      Pivot(leave, enter);
    }
  }

  void DropRow(int row) {
    a_.erase(a_.begin() + row);
    basis_.erase(basis_.begin() + row);
  }

 private:
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> reduced_;
  std::vector<int> basis_;
  std::vector<bool> enterable_;
  int cols_;
};

// Maps the user's LP onto max c.x, Ax = b, x >= 0, b >= 0. Free variables
// are split into a positive and a negative column.
struct StandardForm {
  std::vector<int> source;      // structural column -> LP variable
  std::vector<int> column_sign;  // +1 or -1 per structural column
  int structural = 0;
  int first_artificial = 0;
  int columns = 0;
  std::vector<Rational> cost;    // maximization cost per column
};

struct Solved {
  LpStatus status;
  Tableau tableau;
  StandardForm form;
};

Solved RunTwoPhase(const LinearProgram& lp) {
  CheckWellFormed(lp);
  StandardForm form;
  const int n = static_cast<int>(lp.num_variables());
  const int m = static_cast<int>(lp.constraints.size());
  std::vector<int> first_column(n);
  for (int j = 0; j < n; ++j) {
    first_column[j] = static_cast<int>(form.source.size());
    form.source.push_back(j);
    form.column_sign.push_back(1);
    if (!lp.nonnegative[j]) {
      form.source.push_back(j);
      form.column_sign.push_back(-1);
    }
  }
  form.structural = static_cast<int>(form.source.size());

  // Normalized rows: flip sign so every rhs is nonnegative.
  std::vector<int> row_sign(m, 1);
  std::vector<Relation> relation(m);
  int slacks = 0;
  int artificials = 0;
  for (int i = 0; i < m; ++i) {
    const Constraint& row = lp.constraints[i];
    relation[i] = row.relation;
    if (row.rhs.Sign() < 0) {
      row_sign[i] = -1;
      if (relation[i] == Relation::kLessEqual) {
        relation[i] = Relation::kGreaterEqual;
      } else if (relation[i] == Relation::kGreaterEqual) {
        relation[i] = Relation::kLessEqual;
      }
    }
    if (relation[i] != Relation::kEqual) ++slacks;
    if (relation[i] != Relation::kLessEqual) ++artificials;
  }
  form.first_artificial = form.structural + slacks;
  form.columns = form.first_artificial + artificials;

  Tableau t(m, form.columns);
  int next_slack = form.structural;
  int next_artificial = form.first_artificial;
  for (int i = 0; i < m; ++i) {
    const Constraint& row = lp.constraints[i];
    const Rational sign = row_sign[i];
    for (int c = 0; c < form.structural; ++c) {
      const Rational& coef = row.coefficients[form.source[c]];
      if (coef.IsZero()) continue;
      t.at(i, c) = form.column_sign[c] < 0 ? -(coef * sign) : coef * sign;
    }
    t.rhs(i) = row.rhs * sign;
    if (relation[i] == Relation::kLessEqual) {
      t.at(i, next_slack) = 1;
      t.basis()[i] = next_slack++;
    } else {
      if (relation[i] == Relation::kGreaterEqual) t.at(i, next_slack++) = -1;
      t.at(i, next_artificial) = 1;
      t.basis()[i] = next_artificial++;
    }
  }

  if (artificials > 0) {
    std::vector<Rational> phase_one(form.columns);
    for (int c = form.first_artificial; c < form.columns; ++c) phase_one[c] = -1;
    t.SetObjective(phase_one);
    t.Run();
    if (t.Objective().Sign() < 0) {
      return {LpStatus::kInfeasible, std::move(t), std::move(form)};
    }
    // Pivot zero-level artificials out of the basis; rows where that is
    // impossible are linearly dependent and dropped.
    for (int r = t.rows() - 1; r >= 0; --r) {
      if (t.basis()[r] < form.first_artificial) continue;
      int col = -1;
      for (int c = 0; c < form.first_artificial; ++c) {
        if (!t.at(r, c).IsZero()) {
          col = c;
          break;
        }
      }
      if (col >= 0) {
        t.Pivot(r, col);
      } else {
        t.DropRow(r);
      }
    }
    for (int c = form.first_artificial; c < form.columns; ++c) {
      t.enterable()[c] = false;
    }
  }

  form.cost.assign(form.columns, Rational());
  for (int c = 0; c < form.structural; ++c) {
    Rational cost = lp.objective[form.source[c]];
    if (form.column_sign[c] < 0) cost = -cost;
    if (lp.sense == Sense::kMinimize) cost = -cost;
    form.cost[c] = std::move(cost);
  }
  t.SetObjective(form.cost);
  const LpStatus status = t.Run();
  return {status, std::move(t), std::move(form)};
}

LPSolution Extract(const LinearProgram& lp, const Tableau& t,
                   const StandardForm& form, LpStatus status) {
  LPSolution out;
  out.status = status;
  if (status != LpStatus::kOptimal) return out;
  out.values.assign(lp.num_variables(), Rational());
  for (int r = 0; r < t.rows(); ++r) {
    const int c = t.basis()[r];
    if (c >= form.structural) continue;
    if (form.column_sign[c] > 0) {
      out.values[form.source[c]] += t.rhs(r);
    } else {
      out.values[form.source[c]] -= t.rhs(r);
    }
  }
  out.objective_value = ObjectiveValue(lp, out.values);
  out.is_vertex = true;
  return out;
}

}  // namespace

int LinearProgram::AddVariable(std::string name, Rational cost, bool nonneg) {
  variables.push_back(std::move(name));
  objective.push_back(std::move(cost));
  nonnegative.push_back(nonneg);
  for (Constraint& row : constraints) row.coefficients.resize(variables.size());
  return static_cast<int>(variables.size()) - 1;
}

void LinearProgram::AddConstraint(std::string name,
                                  std::vector<Rational> coefficients,
                                  Relation relation, Rational rhs) {
  if (coefficients.size() > variables.size()) {
    throw InputError("constraint '" + name + "' has too many coefficients");
  }
  coefficients.resize(variables.size());
  constraints.push_back(
      {std::move(name), std::move(coefficients), relation, std::move(rhs)});
}

int LinearProgram::VariableIndex(const std::string& name) const {
  const auto it = std::find(variables.begin(), variables.end(), name);
  return it == variables.end() ? -1
                               : static_cast<int>(it - variables.begin());
}

void CheckWellFormed(const LinearProgram& lp) {
  const std::size_t n = lp.num_variables();
  if (lp.objective.size() != n || lp.nonnegative.size() != n) {
    throw InputError("objective or sign vector does not match variables");
  }
  std::vector<std::string> names = lp.variables;
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end()) {
    throw InputError("duplicate variable name");
  }
  for (const Constraint& row : lp.constraints) {
    if (row.coefficients.size() != n) {
      throw InputError("constraint '" + row.name + "' has wrong width");
    }
  }
}

std::string_view LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

Rational RowActivity(const Constraint& row, std::span<const Rational> x) {
  Rational sum;
  for (std::size_t j = 0; j < row.coefficients.size(); ++j) {
    if (!row.coefficients[j].IsZero()) sum += row.coefficients[j] * x[j];
  }
  return sum;
}

Rational ObjectiveValue(const LinearProgram& lp, std::span<const Rational> x) {
  Rational sum;
  for (std::size_t j = 0; j < lp.objective.size(); ++j) {
    if (!lp.objective[j].IsZero()) sum += lp.objective[j] * x[j];
  }
  return sum;
}

bool RowSatisfied(const Constraint& row, std::span<const Rational> x) {
  const Rational lhs = RowActivity(row, x);
  switch (row.relation) {
    case Relation::kLessEqual:
      return lhs <= row.rhs;
    case Relation::kGreaterEqual:
      return lhs >= row.rhs;
    case Relation::kEqual:
      return lhs == row.rhs;
  }
  return false;
}

bool IsFeasible(const LinearProgram& lp, std::span<const Rational> x) {
  if (x.size() != lp.num_variables()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (lp.nonnegative[j] && x[j].Sign() < 0) return false;
  }
  return std::all_of(lp.constraints.begin(), lp.constraints.end(),
                     [&](const Constraint& row) { return RowSatisfied(row, x); });
}

LPSolution SolveLp(const LinearProgram& lp) {
  Solved s = RunTwoPhase(lp);
  return Extract(lp, s.tableau, s.form, s.status);
}

LPSolution SolveOverOptimalFace(const LinearProgram& lp,
                                const Rational& optimal_value,
                                std::span<const Rational> secondary,
                                Sense sense) {
  if (secondary.size() != lp.num_variables()) {
    throw InputError("secondary objective has wrong width");
  }
  LinearProgram face = lp;
  face.AddConstraint("optimal-face", lp.objective, Relation::kEqual,
                     optimal_value);
  face.objective.assign(secondary.begin(), secondary.end());
  face.sense = sense;
  return SolveLp(face);
}

struct OptimalFace::State {
  LinearProgram lp;
  Tableau tableau;
  StandardForm form;
};

OptimalFace::OptimalFace(const LinearProgram& lp) {
  Solved s = RunTwoPhase(lp);
  base_ = Extract(lp, s.tableau, s.form, s.status);
  if (!base_.optimal()) return;
  for (int c = 0; c < s.tableau.cols(); ++c) {
    if (!s.tableau.reduced(c).IsZero()) s.tableau.enterable()[c] = false;
  }
  state_ = std::make_unique<State>(
      State{lp, std::move(s.tableau), std::move(s.form)});
}

OptimalFace::~OptimalFace() = default;
OptimalFace::OptimalFace(OptimalFace&&) noexcept = default;
OptimalFace& OptimalFace::operator=(OptimalFace&&) noexcept = default;

LPSolution OptimalFace::Optimize(std::span<const Rational> secondary,
                                 Sense sense) const {
  if (!state_) {
    LPSolution none;
    none.status = base_.status;
    return none;
  }
  const LinearProgram& lp = state_->lp;
  if (secondary.size() != lp.num_variables()) {
    throw InputError("secondary objective has wrong width");
  }
  const StandardForm& form = state_->form;
  Tableau t = state_->tableau;
  std::vector<Rational> cost(form.columns);
  for (int c = 0; c < form.structural; ++c) {
    Rational v = secondary[form.source[c]];
    if (form.column_sign[c] < 0) v = -v;
    if (sense == Sense::kMinimize) v = -v;
    cost[c] = std::move(v);
  }
  t.SetObjective(cost);
  const LpStatus status = t.Run();
  LPSolution out = Extract(lp, t, form, status);
  if (out.optimal()) {
    // Report the secondary objective, the quantity the caller optimized.
    Rational value;
    for (std::size_t j = 0; j < secondary.size(); ++j) {
      value += secondary[j] * out.values[j];
    }
    out.objective_value = value;
  }
  return out;
}

}  // namespace matchcore
