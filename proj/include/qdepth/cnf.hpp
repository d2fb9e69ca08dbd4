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

#ifndef QDEPTH_CNF_HPP_
#define QDEPTH_CNF_HPP_

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qdepth {

struct Literal {
  int var = 1;  // 1-based
  bool negated = false;

  // DIMACS encoding: -var when negated.
  int dimacs() const noexcept { return negated ? -var : var; }
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

struct Clause {
  std::array<Literal, 3> literals;

  // Underlying variables, ascending. Polarity is dropped.
  std::array<int, 3> variables() const;
  bool contains(int var) const;
  // Truth value under an assignment indexed by variable (index 0 unused).
  bool satisfied_by(const std::vector<int>& values) const;

  friend bool operator==(const Clause&, const Clause&) = default;
};

struct SatInstance {
  int num_vars = 0;
  std::vector<Clause> clauses;
  std::string source_name;

  std::size_t num_clauses() const noexcept { return clauses.size(); }
  // Variables that occur in at least one clause, ascending.
  std::vector<int> used_variables() const;

  friend bool operator==(const SatInstance& a, const SatInstance& b) {
    return a.num_vars == b.num_vars && a.clauses == b.clauses;
  }
};

struct DimacsOptions {
  // Drop tautological clauses instead of rejecting them. Clauses repeating a
  // variable with the same sign are rejected either way.
  bool allow_degenerate = false;
};

struct DimacsResult {
  SatInstance instance;
  std::vector<std::string> warnings;
};

// Parses DIMACS CNF. Comment lines start with `c`; a `%` line ends the
// clause section (SATLIB trailer), and stray `0`-only lines are ignored.
// Throws ParseError with one of kSyntaxError, kClauseArity,
// kVariableOutOfRange, kTautology, kRepeatedVariable.
DimacsResult parse_dimacs(std::string_view text,
                          const DimacsOptions& options = {},
                          std::string source_name = {});

std::string to_dimacs(const SatInstance& instance);

// Clause incidence ignoring polarity. Clause lists are ascending.
struct ClauseIncidence {
  std::map<int, std::vector<int>> by_var;
  std::map<std::pair<int, int>, std::vector<int>> by_pair;  // first < second

  const std::vector<int>& clauses_of(int var) const;
  const std::vector<int>& clauses_of(int a, int b) const;
};

ClauseIncidence clause_incidence(const SatInstance& instance);

}  // namespace qdepth

#endif  // QDEPTH_CNF_HPP_
