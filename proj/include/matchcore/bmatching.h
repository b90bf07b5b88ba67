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

#ifndef MATCHCORE_BMATCHING_H_
#define MATCHCORE_BMATCHING_H_

#include <cstdint>
#include <string>
#include <vector>

#include "matchcore/core_analysis.h"
#include "matchcore/game.h"
#include "matchcore/lp.h"
#include "matchcore/rational.h"

namespace matchcore {

// True when y is feasible for the game's dual LP and its objective equals
// the primal optimum.
bool IsOptimalDual(const GameInstance& game, const DualSolution& y);

// An imputation built from a dual solution, with its exact core verdict and
// the vertices that received a negative profit (possible only for b-general
// games).
struct DerivedImputation {
  Imputation imputation;
  CoreVerdict verdict;
  std::vector<std::string> negative_entries;
};

// ---- Uniform and unconstrained games --------------------------------------

// profit_i = b * y_i. Throws InputError unless y is optimal.
DerivedImputation UniformImputationFromDual(const GameInstance& game,
                                            const DualSolution& y,
                                            const Caps& caps = {});
// y_i = profit_i / b. Throws InputError unless imp is in the core.
DualSolution UniformDualFromImputation(const GameInstance& game,
                                       const Imputation& imp,
                                       const Caps& caps = {});

// profit_i = b_i * y_i. Throws InputError unless y is optimal.
DerivedImputation UnconImputationFromDual(const GameInstance& game,
                                          const DualSolution& y,
                                          const Caps& caps = {});
// Whether (profit_i / b_i) is an optimal dual.
bool InDualImageUncon(const GameInstance& game, const Imputation& imp);

// ---- Constrained and general games ----------------------------------------

// How one edge's dual values are shared between its endpoints. upper_* split
// z (constrained) or delta (b-general); lower_* split gamma.
struct EdgeSplit {
  Rational upper_left;
  Rational upper_right;
  Rational lower_left;
  Rational lower_right;
};

struct SplitScheme {
  std::vector<EdgeSplit> edges;  // game.edges order

  static SplitScheme AllLeft(const DualSolution& y);
  static SplitScheme AllRight(const DualSolution& y);
  static SplitScheme Balanced(const DualSolution& y);
};

// alpha_i = b_i u_i + sum of left parts, beta_j = b_j v_j + sum of right
// parts. Throws InputError unless y is optimal and s splits its z values.
DerivedImputation ConImputationFromDual(const GameInstance& game,
                                        const DualSolution& y,
                                        const SplitScheme& s,
                                        const Caps& caps = {});

// mu_i = b_i beta_i - a_i alpha_i + sum (d_e delta^i_e - c_e gamma^i_e), and
// symmetrically for the right side. Negative entries are reported, not
// clamped.
DerivedImputation GenImputationFromDual(const GameInstance& game,
                                        const DualSolution& y,
                                        const SplitScheme& s,
                                        const Caps& caps = {});

// Whether some optimal dual and some split reconstruct imp exactly, decided
// by one exact LP feasibility solve. Works for every variant; for the unit
// and scaled variants it reduces to the direct tests above.
bool InDualImage(const GameInstance& game, const Imputation& imp);
bool InDualImageCon(const GameInstance& game, const Imputation& imp);

// ---- Coalition systems ----------------------------------------------------

struct SystemRow {
  Coalition coalition;
  Rational rhs;
  Relation relation = Relation::kGreaterEqual;
};

// Profit variables in Vertices() order, all nonnegative; the grand
// coalition equality first, then one inequality per coalition in
// lexicographic order. Coalitions without a feasible b-matching are left
// out.
struct CoalitionSystem {
  std::vector<std::string> variables;
  std::vector<SystemRow> rows;
  bool connected_only = true;
};

CoalitionSystem BuildCoalitionSystem(const GameInstance& game,
                                     const Caps& caps = {},
                                     bool connected_only = true);

// Exact check; the first violated row is the witness. Throws InputError on
// a dimension mismatch.
CoreVerdict CoreMembershipViaSystem(const CoalitionSystem& system,
                                    const Imputation& imp);

LinearProgram SystemLp(const CoalitionSystem& system);

// Distinct vertices of the system's polytope reached by maximizing random
// objectives with entries in [-3, 3], drawn from a generator seeded with
// `seed`.
std::vector<Imputation> SampleSystemVertices(const CoalitionSystem& system,
                                             std::uint32_t seed, int draws);

}  // namespace matchcore

#endif  // MATCHCORE_BMATCHING_H_
