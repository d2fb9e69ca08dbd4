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

#include "qdepth/gvs.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "qdepth/error.hpp"

namespace qdepth {

namespace {

std::string describe(const Covering& cov) {
  return fmt::format("({}, x{})", cov.pair.name(), cov.free_var);
}

void check_covering(const Clause& clause, const Covering& cov, int c) {
  auto v = clause.variables();
  bool pair_ok = cov.pair.i != cov.pair.j && clause.contains(cov.pair.i) &&
                 clause.contains(cov.pair.j);
  bool free_ok = clause.contains(cov.free_var) &&
                 !cov.pair.contains(cov.free_var);
  if (!pair_ok || !free_ok) {
    throw Error(ErrorCode::kInvalidCover,
                fmt::format("covering {} does not fit clause {} on {{x{}, x{}, "
                            "x{}}}",
                            describe(cov), c, v[0], v[1], v[2]));
  }
}

}  // namespace

CoverAssignment::CoverAssignment(const SatInstance& instance,
                                 std::vector<Covering> choices)
    : choices_(std::move(choices)) {
  validate(instance);
}

CoverAssignment CoverAssignment::from_pairs(const SatInstance& instance,
                                            const std::vector<PairId>& pairs) {
  if (pairs.size() != instance.clauses.size()) {
    throw Error(ErrorCode::kInvalidCover,
                fmt::format("cover has {} entries for {} clauses",
                            pairs.size(), instance.clauses.size()));
  }
  std::vector<Covering> choices;
  choices.reserve(pairs.size());
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    int free_var = 0;
    for (int v : instance.clauses[c].variables()) {
      if (!pairs[c].contains(v)) free_var = v;
    }
    choices.push_back(Covering{pairs[c], free_var});
  }
  return CoverAssignment(instance, std::move(choices));
}

void CoverAssignment::validate(const SatInstance& instance) const {
  if (choices_.size() != instance.clauses.size()) {
    throw Error(ErrorCode::kInvalidCover,
                fmt::format("cover has {} entries for {} clauses",
                            choices_.size(), instance.clauses.size()));
  }
  for (std::size_t c = 0; c < choices_.size(); ++c) {
    check_covering(instance.clauses[c], choices_[c], static_cast<int>(c));
  }
}

std::set<PairId> CoverAssignment::used_pairs() const {
  std::set<PairId> used;
  for (const auto& cov : choices_) used.insert(cov.pair);
  return used;
}

std::map<PairId, std::vector<int>> CoverAssignment::clauses_by_pair() const {
  std::map<PairId, std::vector<int>> by_pair;
  for (std::size_t c = 0; c < choices_.size(); ++c) {
    by_pair[choices_[c].pair].push_back(static_cast<int>(c));
  }
  return by_pair;
}

std::vector<int> CoverAssignment::free_clauses(int var) const {
  std::vector<int> out;
  for (std::size_t c = 0; c < choices_.size(); ++c) {
    if (choices_[c].free_var == var) out.push_back(static_cast<int>(c));
  }
  return out;
}

std::array<Polynomial, 3> substitution_constraints(const PairId& pair) {
  const std::vector<int> vars{pair.i, pair.j};
  auto var = [](const VarId& v) { return Polynomial::variable(v); };
  Polynomial u = var(pair.substitution());
  Polynomial xi = var(VarId::problem(pair.i));
  Polynomial xj = var(VarId::problem(pair.j));
  Polynomial d1 = var(VarId::substitution_slack(vars, 1));
  Polynomial d2 = var(VarId::substitution_slack(vars, 2));
  Polynomial d3 = var(VarId::substitution_slack(vars, 3));
  return {u - xi - xj - d1 + Polynomial(1), u - xi + d2, u - xj + d3};
}

Polynomial substitute_clause(const Clause& clause, const Covering& covering) {
  const VarId xi = VarId::problem(covering.pair.i);
  const VarId xj = VarId::problem(covering.pair.j);
  const VarId u = covering.pair.substitution();
  Polynomial out;
  const Polynomial expanded = reformulate_clause(clause);
  for (const auto& [mono, coeff] : expanded.terms()) {
    if (!mono.contains(xi) || !mono.contains(xj)) {
      out.add_term(mono, coeff);
      continue;
    }
    std::vector<VarId> vars{u};
    for (const auto& v : mono.vars()) {
      if (v != xi && v != xj) vars.push_back(v);
    }
    out.add_term(Monomial(std::move(vars)), coeff);
  }
  return out;
}

Rational default_gvs_penalty(const SatInstance& instance) {
  return Rational(static_cast<std::int64_t>(instance.clauses.size()) + 1);
}

std::vector<Polynomial> gvs_pieces(const SatInstance& instance,
                                   const CoverAssignment& cover,
                                   const Rational& lambda) {
  if (lambda <= Rational(0)) {
    throw Error(ErrorCode::kInvalidPenalty,
                "penalty weight must be positive, got " + to_string(lambda));
  }
  cover.validate(instance);
  std::vector<Polynomial> pieces;
  for (std::size_t c = 0; c < instance.clauses.size(); ++c) {
    pieces.push_back(substitute_clause(instance.clauses[c], cover[c]));
  }
  for (const auto& pair : cover.used_pairs()) {
    for (const auto& r : substitution_constraints(pair)) {
      pieces.push_back(lambda * (r * r));
    }
  }
  return pieces;
}

Polynomial dualize_gvs(const SatInstance& instance,
                       const CoverAssignment& cover, const Rational& lambda) {
  Polynomial total;
  for (const auto& piece : gvs_pieces(instance, cover, lambda)) total += piece;
  return total;
}

InteractionGraph gvs_graph(const SatInstance& instance,
                           const CoverAssignment& cover) {
  return interaction_graph(
      gvs_pieces(instance, cover, default_gvs_penalty(instance)));
}

namespace {

// free_of_pair[u] and free_in[x] hold one entry per clause when counting
// clauses, or per distinct edge otherwise.
DegreeTable degree_table(const SatInstance& instance,
                         const CoverAssignment& cover, bool count_clauses) {
  cover.validate(instance);
  ExpansionSets sets = expansion_sets(instance);
  std::set<PairId> used = cover.used_pairs();

  std::map<PairId, std::multiset<int>> free_of_pair;
  std::map<int, std::multiset<PairId>> free_in;
  for (const auto& cov : cover.choices()) {
    auto& partners = free_of_pair[cov.pair];
    if (count_clauses || !partners.contains(cov.free_var)) {
      partners.insert(cov.free_var);
      free_in[cov.free_var].insert(cov.pair);
    }
  }

  DegreeTable table;
  for (const auto& [var, clauses] : clause_incidence(instance).by_var) {
    const auto& p_a = sets.P_for(var);
    int used_a = 0;
    int used_in_p = 0;
    for (const auto& s : used) {
      if (!s.contains(var)) continue;
      ++used_a;
      if (p_a.contains(s)) ++used_in_p;
    }
    int free_count = static_cast<int>(free_in[var].size());
    table.degrees[VarId::problem(var)] = 4 * used_a - used_in_p +
                                         static_cast<int>(p_a.size()) +
                                         free_count;
  }
  for (const auto& s : used) {
    std::vector<int> vars{s.i, s.j};
    table.degrees[s.substitution()] =
        5 + static_cast<int>(free_of_pair[s].size());
    table.degrees[VarId::substitution_slack(vars, 1)] = 3;
    table.degrees[VarId::substitution_slack(vars, 2)] = 2;
    table.degrees[VarId::substitution_slack(vars, 3)] = 2;
  }
  for (const auto& [v, d] : table.degrees) {
    if (d > table.max_degree) {
      table.max_degree = d;
      table.argmax = v;
    }
  }
  return table;
}

}  // namespace

DegreeTable gvs_degree_table(const SatInstance& instance,
                             const CoverAssignment& cover) {
  return degree_table(instance, cover, false);
}

DegreeTable clause_count_degree_table(const SatInstance& instance,
                                      const CoverAssignment& cover) {
  return degree_table(instance, cover, true);
}

DepthReport gvs_depth_report(const SatInstance& instance,
                             const CoverAssignment& cover,
                             Formulation formulation) {
  DegreeTable table = gvs_degree_table(instance, cover);
  DepthReport report = make_depth_report(
      formulation, table.max_degree, 4 * cover.num_subs(),
      {table.degrees.begin(), table.degrees.end()});
  report.num_subs = cover.num_subs();
  return report;
}

GeneralDegrees general_substitution_degrees(const GeneralDegreeInput& input) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInconsistentOverlapData, what);
  };
  std::map<int, std::set<int>> subs_of;  // U_i as substitution indices
  GeneralDegrees out;
  for (std::size_t k = 0; k < input.substitutions.size(); ++k) {
    const auto& shape = input.substitutions[k];
    std::set<int> vars(shape.vars.begin(), shape.vars.end());
    if (vars.size() < 2 || vars.size() != shape.vars.size()) {
      fail(fmt::format("substitution {} needs at least two distinct variables",
                       k));
    }
    if (shape.m < 1 || shape.covered_clauses < 0) {
      fail(fmt::format("substitution {} has m = {}, |C_u| = {}", k, shape.m,
                       shape.covered_clauses));
    }
    for (int v : vars) subs_of[v].insert(static_cast<int>(k));
    int size = static_cast<int>(vars.size());
    out.u.push_back(2 * size + shape.m + shape.covered_clauses);
    out.slack_degrees.emplace_back(size + shape.m, 2);
  }

  auto overlap = [&](int i, int p) {
    const auto& a = subs_of[i];
    const auto& b = subs_of[p];
    return static_cast<int>(std::count_if(
        a.begin(), a.end(), [&](int k) { return b.contains(k); }));
  };
  for (const auto& [key, claimed] : input.overlap_sizes) {
    if (overlap(key.first, key.second) != claimed) {
      fail(fmt::format("|U_{} & U_{}| given as {}, substitutions give {}",
                       key.first, key.second, claimed,
                       overlap(key.first, key.second)));
    }
  }
  for (const auto& [key, claimed] : input.overlap_indicators) {
    if ((overlap(key.first, key.second) > 0) != claimed) {
      fail(fmt::format("overlap indicator for ({}, {}) disagrees with the "
                       "substitutions",
                       key.first, key.second));
    }
  }

  std::set<int> vars;
  for (const auto& [v, subs] : subs_of) vars.insert(v);
  for (const auto& [v, count] : input.free_clauses) {
    if (count < 0) fail(fmt::format("negative |C'| for variable {}", v));
    vars.insert(v);
  }
  for (int i : vars) {
    int degree = 0;
    for (int k : subs_of[i]) {
      const auto& shape = input.substitutions[k];
      degree += static_cast<int>(shape.vars.size()) + shape.m + 1;
    }
    for (int p : vars) {
      if (p == i) continue;
      int shared = overlap(i, p);
      if (shared > 0) degree -= shared - 1;
    }
    auto it = input.free_clauses.find(i);
    if (it != input.free_clauses.end()) degree += it->second;
    out.x[i] = degree;
  }
  return out;
}

}  // namespace qdepth
