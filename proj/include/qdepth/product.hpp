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

// Product (PUBO) formulation: each clause becomes the product of its
// falsifying-literal indicators, and the combinatorial sets used to pick
// which variable pairs to substitute.

#ifndef QDEPTH_PRODUCT_HPP_
#define QDEPTH_PRODUCT_HPP_

#include <array>
#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qdepth/cnf.hpp"
#include "qdepth/pubo.hpp"

namespace qdepth {

// Unordered pair of distinct variables, stored with i < j.
struct PairId {
  int i = 1;
  int j = 2;

  static PairId of(int a, int b);

  bool contains(int v) const noexcept { return v == i || v == j; }
  int other(int v) const noexcept { return v == i ? j : i; }
  VarId substitution() const { return VarId::substitution({i, j}); }
  // s12, or s1_13 once an index has more than one digit.
  std::string name() const;

  friend auto operator<=>(const PairId&, const PairId&) = default;
};

// One way to cover a clause: substitute `pair`, leave `free_var` alone.
struct Covering {
  PairId pair;
  int free_var = 0;

  friend auto operator<=>(const Covering&, const Covering&) = default;
};

// Vanishes exactly on the assignments satisfying the clause.
Polynomial reformulate_clause(const Clause& clause);

// Sum of clause reformulations; minimum 0 iff satisfiable.
Polynomial product_objective(const SatInstance& instance);
std::vector<Polynomial> product_pieces(const SatInstance& instance);

struct ExpansionSets {
  std::set<PairId> P;                     // two-variable expansion supports
  std::map<int, std::set<PairId>> P_of;   // P restricted to pairs holding a
  std::set<PairId> S;                     // every pair inside some clause
  std::vector<std::array<int, 3>> ES3;    // clause variable sets
  std::vector<std::array<Covering, 3>> coverings;

  // (|P_1|, ..., |P_n|).
  std::vector<int> p_norm(int num_vars) const;
  const std::set<PairId>& P_for(int var) const;
};

// The three coverings of a clause, ordered by pair.
std::array<Covering, 3> clause_coverings(const Clause& clause);

ExpansionSets expansion_sets(const SatInstance& instance);

// Bipartite incidence between candidate pairs (left) and clauses (right).
struct CoveringGraph {
  std::vector<PairId> left;             // = S, ascending
  int num_right = 0;                    // one vertex per clause
  std::vector<std::pair<int, int>> edges;  // (left index, clause)

  int left_degree(int left_index) const;
  int right_degree(int clause) const;
  // degree -> number of left vertices with that degree
  std::map<int, int> left_degree_histogram() const;
};

CoveringGraph covering_graph(const SatInstance& instance);

// Hypergraph of the product objective when three-qubit gates are native:
// two-variable terms inside a clause triple ride along with its gate.
InteractionGraph native3_graph(const SatInstance& instance);

}  // namespace qdepth

#endif  // QDEPTH_PRODUCT_HPP_
