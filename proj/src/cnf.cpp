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

#include "qdepth/cnf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "qdepth/error.hpp"

namespace qdepth {

std::array<int, 3> Clause::variables() const {
  std::array<int, 3> vars{literals[0].var, literals[1].var, literals[2].var};
  std::sort(vars.begin(), vars.end());
  return vars;
}

bool Clause::contains(int var) const {
  return std::any_of(literals.begin(), literals.end(),
                     [var](const Literal& l) { return l.var == var; });
}

bool Clause::satisfied_by(const std::vector<int>& values) const {
  return std::any_of(literals.begin(), literals.end(), [&](const Literal& l) {
    return (values.at(l.var) != 0) != l.negated;
  });
}

std::vector<int> SatInstance::used_variables() const {
  std::set<int> vars;
  for (const auto& c : clauses) {
    for (const auto& l : c.literals) vars.insert(l.var);
  }
  return {vars.begin(), vars.end()};
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long parse_long(std::string_view token, int line) {
  long value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(ErrorCode::kSyntaxError, line,
                     fmt::format("expected an integer, got '{}'", token));
  }
  return value;
}

}  // namespace

DimacsResult parse_dimacs(std::string_view text, const DimacsOptions& options,
                          std::string source_name) {
  DimacsResult result;
  SatInstance& inst = result.instance;
  inst.source_name = std::move(source_name);

  bool have_header = false;
  long declared_clauses = 0;
  long read_clauses = 0;
  std::vector<int> pending;
  int pending_line = 0;
  std::set<std::array<int, 3>> seen;

  auto finish_clause = [&] {
    ++read_clauses;
    if (pending.size() != 3) {
      throw ParseError(ErrorCode::kClauseArity, pending_line,
                       fmt::format("clause has {} literals, expected 3",
                                   pending.size()));
    }
    std::array<int, 3> lits{pending[0], pending[1], pending[2]};
    pending.clear();
    bool tautology = false;
    bool repeated = false;
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        if (lits[a] == -lits[b]) tautology = true;
        if (lits[a] == lits[b]) repeated = true;
      }
    }
    if (tautology) {
      if (!options.allow_degenerate) {
        throw ParseError(ErrorCode::kTautology, pending_line,
                         "clause contains a variable and its negation");
      }
      result.warnings.push_back(
          fmt::format("line {}: dropped tautological clause", pending_line));
      return;
    }
    if (repeated) {
      throw ParseError(ErrorCode::kRepeatedVariable, pending_line,
                       "clause repeats a literal");
    }
    Clause clause;
    for (int k = 0; k < 3; ++k) {
      clause.literals[k] = Literal{std::abs(lits[k]), lits[k] < 0};
    }
    std::array<int, 3> key = lits;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) {
      result.warnings.push_back(fmt::format(
          "line {}: duplicate clause kept (clause {})", pending_line,
          inst.clauses.size()));
    }
    inst.clauses.push_back(clause);
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto toks = tokens(raw);
    if (toks.empty()) continue;
    if (toks[0].front() == 'c') continue;
    if (toks[0].front() == '%') break;
    if (toks[0] == "p") {
      if (have_header) {
        throw ParseError(ErrorCode::kSyntaxError, line_no, "second header");
      }
      if (toks.size() != 4 || toks[1] != "cnf") {
        throw ParseError(ErrorCode::kSyntaxError, line_no,
                         "expected 'p cnf <vars> <clauses>'");
      }
      long nv = parse_long(toks[2], line_no);
      declared_clauses = parse_long(toks[3], line_no);
      if (nv < 0 || declared_clauses < 0) {
        throw ParseError(ErrorCode::kSyntaxError, line_no,
                         "negative count in header");
      }
      inst.num_vars = static_cast<int>(nv);
      have_header = true;
      continue;
    }
    if (!have_header) {
      throw ParseError(ErrorCode::kSyntaxError, line_no,
                       "clause data before 'p cnf' header");
    }
    for (auto tok : toks) {
      long lit = parse_long(tok, line_no);
      if (lit == 0) {
        // A lone 0 with nothing pending is a trailer artifact, not a clause.
        if (!pending.empty()) finish_clause();
        continue;
      }
      if (std::abs(lit) > inst.num_vars) {
        throw ParseError(ErrorCode::kVariableOutOfRange, line_no,
                         fmt::format("literal {} exceeds {} variables", lit,
                                     inst.num_vars));
      }
      if (pending.empty()) pending_line = line_no;
      pending.push_back(static_cast<int>(lit));
    }
  }
  if (!have_header) {
    throw ParseError(ErrorCode::kSyntaxError, line_no, "missing 'p cnf' header");
  }
  if (!pending.empty()) {
    throw ParseError(ErrorCode::kSyntaxError, pending_line,
                     "last clause is not terminated by 0");
  }
  if (read_clauses != declared_clauses) {
    throw ParseError(ErrorCode::kSyntaxError, line_no,
                     fmt::format("header declares {} clauses, found {}",
                                 declared_clauses, read_clauses));
  }
  return result;
}

std::string to_dimacs(const SatInstance& instance) {
  std::string out;
  if (!instance.source_name.empty()) {
    out += "c " + instance.source_name + "\n";
  }
  out += fmt::format("p cnf {} {}\n", instance.num_vars,
                     instance.clauses.size());
  for (const auto& c : instance.clauses) {
    out += fmt::format("{} {} {} 0\n", c.literals[0].dimacs(),
                       c.literals[1].dimacs(), c.literals[2].dimacs());
  }
  return out;
}

const std::vector<int>& ClauseIncidence::clauses_of(int var) const {
  static const std::vector<int> kEmpty;
  auto it = by_var.find(var);
  return it == by_var.end() ? kEmpty : it->second;
}

const std::vector<int>& ClauseIncidence::clauses_of(int a, int b) const {
  static const std::vector<int> kEmpty;
  auto it = by_pair.find({std::min(a, b), std::max(a, b)});
  return it == by_pair.end() ? kEmpty : it->second;
}

ClauseIncidence clause_incidence(const SatInstance& instance) {
  ClauseIncidence inc;
  for (int c = 0; c < static_cast<int>(instance.clauses.size()); ++c) {
    auto vars = instance.clauses[c].variables();
    for (int i = 0; i < 3; ++i) {
      inc.by_var[vars[i]].push_back(c);
      for (int j = i + 1; j < 3; ++j) {
        inc.by_pair[{vars[i], vars[j]}].push_back(c);
      }
    }
  }
  return inc;
}

}  // namespace qdepth
