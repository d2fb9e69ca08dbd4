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

#include "qdepth/product.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace qdepth {

PairId PairId::of(int a, int b) {
  return a < b ? PairId{a, b} : PairId{b, a};
}

std::string PairId::name() const {
  if (i > 9 || j > 9) return fmt::format("s{}_{}", i, j);
  return fmt::format("s{}{}", i, j);
}

Polynomial reformulate_clause(const Clause& clause) {
  Polynomial p(1);
  for (const auto& lit : clause.literals) {
    Polynomial x = Polynomial::variable(VarId::problem(lit.var));
    p = p * (lit.negated ? x : Polynomial(1) - x);
  }
  return p;
}

std::vector<Polynomial> product_pieces(const SatInstance& instance) {
  std::vector<Polynomial> pieces;
  pieces.reserve(instance.clauses.size());
  for (const auto& c : instance.clauses) {
    pieces.push_back(reformulate_clause(c));
  }
  return pieces;
}

Polynomial product_objective(const SatInstance& instance) {
  Polynomial total;
  for (const auto& piece : product_pieces(instance)) total += piece;
  return total;
}

std::vector<int> ExpansionSets::p_norm(int num_vars) const {
  std::vector<int> norm(std::max(num_vars, 0), 0);
  for (const auto& [var, pairs] : P_of) {
    if (var >= 1 && var <= num_vars) {
      norm[var - 1] = static_cast<int>(pairs.size());
    }
  }
  return norm;
}

const std::set<PairId>& ExpansionSets::P_for(int var) const {
  static const std::set<PairId> kEmpty;
  auto it = P_of.find(var);
  return it == P_of.end() ? kEmpty : it->second;
}

std::array<Covering, 3> clause_coverings(const Clause& clause) {
  auto v = clause.variables();
  return {Covering{PairId::of(v[0], v[1]), v[2]},
          Covering{PairId::of(v[0], v[2]), v[1]},
          Covering{PairId::of(v[1], v[2]), v[0]}};
}

ExpansionSets expansion_sets(const SatInstance& instance) {
  ExpansionSets sets;
  for (const auto& clause : instance.clauses) {
    const Polynomial expanded = reformulate_clause(clause);
    for (const auto& [mono, coeff] : expanded.terms()) {
      if (mono.size() != 2) continue;
      PairId pair =
          PairId::of(mono.vars()[0].index(), mono.vars()[1].index());
      sets.P.insert(pair);
      sets.P_of[pair.i].insert(pair);
      sets.P_of[pair.j].insert(pair);
    }
    sets.ES3.push_back(clause.variables());
    sets.coverings.push_back(clause_coverings(clause));
    for (const auto& cov : sets.coverings.back()) sets.S.insert(cov.pair);
  }
  return sets;
}

int CoveringGraph::left_degree(int left_index) const {
  return static_cast<int>(
      std::count_if(edges.begin(), edges.end(),
                    [&](const auto& e) { return e.first == left_index; }));
}

int CoveringGraph::right_degree(int clause) const {
  return static_cast<int>(
      std::count_if(edges.begin(), edges.end(),
                    [&](const auto& e) { return e.second == clause; }));
}

std::map<int, int> CoveringGraph::left_degree_histogram() const {
  std::vector<int> degree(left.size(), 0);
  for (const auto& e : edges) ++degree[e.first];
  std::map<int, int> hist;
  for (int d : degree) ++hist[d];
  return hist;
}

CoveringGraph covering_graph(const SatInstance& instance) {
  ExpansionSets sets = expansion_sets(instance);
  CoveringGraph g;
  g.left.assign(sets.S.begin(), sets.S.end());
  g.num_right = static_cast<int>(instance.clauses.size());
  for (int c = 0; c < g.num_right; ++c) {
    for (const auto& cov : sets.coverings[c]) {
      auto it = std::lower_bound(g.left.begin(), g.left.end(), cov.pair);
      g.edges.emplace_back(static_cast<int>(it - g.left.begin()), c);
    }
  }
  return g;
}

InteractionGraph native3_graph(const SatInstance& instance) {
  return drop_subsumed_edges(interaction_graph(product_pieces(instance)));
}

}  // namespace qdepth
