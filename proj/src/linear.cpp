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

#include "qdepth/linear.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "qdepth/error.hpp"

namespace qdepth {

LinearModel build_linear_model(const SatInstance& instance) {
  LinearModel model;
  for (int c = 0; c < static_cast<int>(instance.clauses.size()); ++c) {
    Polynomial z = Polynomial::variable(VarId::clause_indicator(c));
    model.objective += z;
    Polynomial f = Polynomial::variable(VarId::clause_slack(c, 1)) +
                   Polynomial::variable(VarId::clause_slack(c, 2)) -
                   Polynomial(2) - z;
    for (const auto& lit : instance.clauses[c].literals) {
      Polynomial x = Polynomial::variable(VarId::problem(lit.var));
      f += lit.negated ? x : Polynomial(1) - x;
    }
    model.constraints.push_back(std::move(f));
  }
  return model;
}

Rational default_linear_penalty(const SatInstance& instance) {
  return Rational(static_cast<std::int64_t>(instance.clauses.size()) + 1);
}

namespace {

void check_penalty(const Rational& lambda) {
  if (lambda <= Rational(0)) {
    throw Error(ErrorCode::kInvalidPenalty,
                "penalty weight must be positive, got " + to_string(lambda));
  }
}

}  // namespace

std::vector<Polynomial> linear_pieces(const SatInstance& instance,
                                      const Rational& lambda) {
  check_penalty(lambda);
  LinearModel model = build_linear_model(instance);
  std::vector<Polynomial> pieces;
  pieces.reserve(model.constraints.size() + 1);
  pieces.push_back(model.objective);
  for (const auto& f : model.constraints) {
    pieces.push_back(-lambda * (f * f));
  }
  return pieces;
}

Polynomial dualize_linear(const SatInstance& instance, const Rational& lambda) {
  Polynomial total;
  for (const auto& piece : linear_pieces(instance, lambda)) total += piece;
  return total;
}

InteractionGraph linear_graph(const SatInstance& instance) {
  return interaction_graph(
      linear_pieces(instance, default_linear_penalty(instance)));
}

int linear_degree_closed_form(const ClauseIncidence& incidence, int var) {
  const auto& own = incidence.clauses_of(var);
  if (own.empty()) {
    throw Error(ErrorCode::kIsolatedVariable,
                fmt::format("variable {} occurs in no clause", var));
  }
  int degree = 5 * static_cast<int>(own.size());
  for (const auto& [pair, clauses] : incidence.by_pair) {
    if (pair.first == var || pair.second == var) {
      degree -= static_cast<int>(clauses.size()) - 1;
    }
  }
  return degree;
}

int linear_degree_closed_form(const SatInstance& instance, int var) {
  return linear_degree_closed_form(clause_incidence(instance), var);
}

DepthReport linear_depth_report(const SatInstance& instance,
                                const Rational& lambda) {
  check_penalty(lambda);
  ClauseIncidence incidence = clause_incidence(instance);
  std::vector<std::pair<VarId, int>> degrees;
  int max_degree = 0;
  for (const auto& [var, clauses] : incidence.by_var) {
    int d = linear_degree_closed_form(incidence, var);
    degrees.emplace_back(VarId::problem(var), d);
    max_degree = std::max(max_degree, d);
  }
  for (int c = 0; c < static_cast<int>(instance.clauses.size()); ++c) {
    degrees.emplace_back(VarId::clause_indicator(c), kLinearAncillaDegree);
    degrees.emplace_back(VarId::clause_slack(c, 1), kLinearAncillaDegree);
    degrees.emplace_back(VarId::clause_slack(c, 2), kLinearAncillaDegree);
    max_degree = std::max(max_degree, kLinearAncillaDegree);
  }
  std::sort(degrees.begin(), degrees.end());
  return make_depth_report(Formulation::kLinear, max_degree,
                           3 * static_cast<int>(instance.clauses.size()),
                           std::move(degrees));
}

DepthReport linear_depth_report(const SatInstance& instance) {
  return linear_depth_report(instance, default_linear_penalty(instance));
}

}  // namespace qdepth
