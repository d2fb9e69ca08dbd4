// Copyright 2026 The qdepth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Global variable substitution: every clause has one of its three variable
// pairs replaced by a fresh variable u, tied to the product of the pair by
// three slack-completed equalities that are dualized into the objective.

#ifndef QDEPTH_GVS_HPP_
#define QDEPTH_GVS_HPP_

#include <array>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "qdepth/cnf.hpp"
#include "qdepth/product.hpp"
#include "qdepth/pubo.hpp"
#include "qdepth/report.hpp"

namespace qdepth {

// One covering per clause. Construction validates against the instance and
// throws Error(kInvalidCover) on a size mismatch, a pair outside the clause,
// or a free variable that is not the remaining one.
class CoverAssignment {
 public:
  CoverAssignment() = default;
  CoverAssignment(const SatInstance& instance, std::vector<Covering> choices);

  // Free variables are filled in from the clauses.
  static CoverAssignment from_pairs(const SatInstance& instance,
                                    const std::vector<PairId>& pairs);

  const std::vector<Covering>& choices() const noexcept { return choices_; }
  const Covering& operator[](std::size_t c) const { return choices_.at(c); }
  std::size_t size() const noexcept { return choices_.size(); }

  std::set<PairId> used_pairs() const;
  int num_subs() const { return static_cast<int>(used_pairs().size()); }
  // C_u: clauses covered by each used pair, ascending.
  std::map<PairId, std::vector<int>> clauses_by_pair() const;
  // C'_x: clauses in which var is the free variable.
  std::vector<int> free_clauses(int var) const;

  // Throws Error(kInvalidCover) unless this cover fits the instance.
  void validate(const SatInstance& instance) const;

  friend bool operator==(const CoverAssignment&,
                         const CoverAssignment&) = default;

 private:
  std::vector<Covering> choices_;
};

// Residuals that vanish, for some slack values, iff u = x_i x_j:
//   A: u - x_i - x_j - d1 + 1
//   B: u - x_i + d2
//   C: u - x_j + d3
std::array<Polynomial, 3> substitution_constraints(const PairId& pair);

// Clause reformulation with x_i x_j replaced by u_ij.
Polynomial substitute_clause(const Clause& clause, const Covering& covering);

// |C| + 1. A wrong u can lower a substituted clause term by at most one per
// covered clause, so this keeps every minimizer consistent.
Rational default_gvs_penalty(const SatInstance& instance);

// Substituted clauses followed by lambda * r^2 for every residual of every
// used pair. Throws kInvalidPenalty, kInvalidCover.
std::vector<Polynomial> gvs_pieces(const SatInstance& instance,
                                   const CoverAssignment& cover,
                                   const Rational& lambda);

// Sum of gvs_pieces; quadratic, minimum 0 iff the instance is satisfiable.
Polynomial dualize_gvs(const SatInstance& instance,
                       const CoverAssignment& cover, const Rational& lambda);

InteractionGraph gvs_graph(const SatInstance& instance,
                           const CoverAssignment& cover);

struct DegreeTable {
  std::map<VarId, int> degrees;
  int max_degree = 0;
  std::optional<VarId> argmax;  // smallest vertex attaining max_degree
};

// Closed-form degrees of every vertex of gvs_graph:
//   deg(x_a) = 4 |U_a| - |U_a & P_a| + |P_a| + #{u : a free in a clause of u}
//   deg(u)   = 5 + #{distinct free variables of clauses covered by u}
//   deg(d1)  = 3, deg(d2) = deg(d3) = 2
// U_a is the set of used pairs containing a. Clauses sharing a variable set
// add one edge, not one per clause.
DegreeTable gvs_degree_table(const SatInstance& instance,
                             const CoverAssignment& cover);

// Degrees as the substitution formulas and the integer program count them:
// every clause adds its own u-x edge, so |C_u| and |C'_x| count clauses.
// Agrees with gvs_degree_table unless two clauses share a variable set, where
// the graph has one edge and this table counts each clause.
DegreeTable clause_count_degree_table(const SatInstance& instance,
                                      const CoverAssignment& cover);

DepthReport gvs_depth_report(const SatInstance& instance,
                             const CoverAssignment& cover,
                             Formulation formulation = Formulation::kGvsCover);

// Degrees in the substitution subgraph for substitutions of any size.
struct SubstitutionShape {
  std::vector<int> vars;   // the substituted variables, at least two
  int m = 1;               // slacks in the product constraint
  int covered_clauses = 0; // |C_u|
};

struct GeneralDegreeInput {
  std::vector<SubstitutionShape> substitutions;
  std::map<int, int> free_clauses;  // |C'_x| per variable
  // Optional caller-supplied overlap data, checked against the shapes:
  // |U_i & U_p| per pair (i < p) and the indicator U_i & U_p != {}.
  std::map<std::pair<int, int>, int> overlap_sizes;
  std::map<std::pair<int, int>, bool> overlap_indicators;
};

struct GeneralDegrees {
  std::map<int, int> x;
  std::vector<int> u;                             // per substitution
  std::vector<std::pair<int, int>> slack_degrees; // (product slack, others)
};

// Throws Error(kInconsistentOverlapData) when the overlap data disagree with
// the shapes, a shape has fewer than two distinct variables, or m < 1.
GeneralDegrees general_substitution_degrees(const GeneralDegreeInput& input);

}  // namespace qdepth

#endif  // QDEPTH_GVS_HPP_
