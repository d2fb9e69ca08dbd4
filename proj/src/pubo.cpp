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

#include "qdepth/pubo.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include <fmt/format.h>

#include "qdepth/error.hpp"

namespace qdepth {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingVariable: return "MissingVariable";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kClauseArity: return "ClauseArityError";
    case ErrorCode::kVariableOutOfRange: return "VariableOutOfRange";
    case ErrorCode::kTautology: return "TautologyError";
    case ErrorCode::kRepeatedVariable: return "RepeatedVariableError";
    case ErrorCode::kIsolatedVariable: return "IsolatedVariable";
    case ErrorCode::kInvalidPenalty: return "InvalidPenalty";
    case ErrorCode::kInvalidCover: return "InvalidCover";
    case ErrorCode::kInconsistentOverlapData: return "InconsistentOverlapData";
    case ErrorCode::kNotSimpleGraph: return "NotSimpleGraph";
    case ErrorCode::kImproperColoring: return "ImproperColoring";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return fmt::format("{}/{}", r.numerator(), r.denominator());
}

// ---------------------------------------------------------------------------
// VarId

namespace {

[[noreturn]] void syntax_error(std::string_view what, std::string_view text) {
  throw Error(ErrorCode::kSyntaxError,
              fmt::format("{}: '{}'", what, text));
}

void check_positive(int value, std::string_view what) {
  if (value < 1) {
    throw Error(ErrorCode::kSyntaxError,
                fmt::format("{} must be >= 1, got {}", what, value));
  }
}

std::vector<int> canonical_substitution(std::vector<int> vars) {
  std::sort(vars.begin(), vars.end());
  if (vars.size() < 2 ||
      std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
    throw Error(ErrorCode::kSyntaxError,
                "substitution needs at least two distinct variables");
  }
  for (int v : vars) check_positive(v, "substituted variable");
  return vars;
}

std::string substitution_label(std::span<const int> vars) {
  bool short_form =
      std::all_of(vars.begin(), vars.end(), [](int v) { return v <= 9; });
  return short_form ? fmt::format("{}", fmt::join(vars, ""))
                    : fmt::format("{}", fmt::join(vars, "_"));
}

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    syntax_error("bad integer in variable name", whole);
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<int> parse_substitution_label(
    std::span<const std::string_view> parts, std::string_view whole) {
  std::vector<int> vars;
  if (parts.size() == 1) {
    for (char ch : parts[0]) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        syntax_error("bad substitution name", whole);
      }
      vars.push_back(ch - '0');
    }
  } else {
    for (auto part : parts) vars.push_back(parse_int(part, whole));
  }
  try {
    return canonical_substitution(std::move(vars));
  } catch (const Error&) {
    syntax_error("bad substitution name", whole);
  }
}

}  // namespace

VarId VarId::problem(int index) {
  check_positive(index, "problem variable index");
  return VarId(VarKind::kProblem, false, {index}, 0);
}

VarId VarId::clause_indicator(int clause) {
  if (clause < 0) syntax_error("negative clause index", std::to_string(clause));
  return VarId(VarKind::kClauseIndicator, false, {clause}, 0);
}

VarId VarId::substitution(std::vector<int> vars) {
  return VarId(VarKind::kSubstitution, false,
               canonical_substitution(std::move(vars)), 0);
}

VarId VarId::clause_slack(int clause, int slot) {
  if (clause < 0) syntax_error("negative clause index", std::to_string(clause));
  check_positive(slot, "slack slot");
  return VarId(VarKind::kSlack, false, {clause}, slot);
}

VarId VarId::substitution_slack(std::vector<int> vars, int slot) {
  check_positive(slot, "slack slot");
  return VarId(VarKind::kSlack, true, canonical_substitution(std::move(vars)),
               slot);
}

int VarId::index() const {
  if (kind_ == VarKind::kSubstitution || is_substitution_slack()) {
    throw Error(ErrorCode::kSyntaxError,
                "substitution variables have no scalar index");
  }
  return payload_.front();
}

std::span<const int> VarId::substituted() const {
  if (kind_ == VarKind::kSubstitution || is_substitution_slack()) {
    return payload_;
  }
  return {};
}

std::string VarId::name() const {
  switch (kind_) {
    case VarKind::kProblem:
      return fmt::format("x{}", payload_.front());
    case VarKind::kClauseIndicator:
      return fmt::format("z{}", payload_.front() + 1);
    case VarKind::kSubstitution:
      return "u" + substitution_label(payload_);
    case VarKind::kSlack:
      if (slack_of_substitution_) {
        return fmt::format("du{}_{}", substitution_label(payload_), slot_);
      }
      return fmt::format("d{}_{}", payload_.front() + 1, slot_);
  }
  return "?";
}

VarId VarId::parse(std::string_view text) {
  if (text.size() < 2) syntax_error("bad variable name", text);
  std::string_view rest = text.substr(1);
  switch (text.front()) {
    case 'x':
      return problem(parse_int(rest, text));
    case 'z': {
      int c = parse_int(rest, text);
      if (c < 1) syntax_error("clause numbers are 1-based", text);
      return clause_indicator(c - 1);
    }
    case 'u': {
      auto parts = split(rest, '_');
      return substitution(parse_substitution_label(parts, text));
    }
    case 'd': {
      bool of_sub = rest.front() == 'u';
      auto parts = split(of_sub ? rest.substr(1) : rest, '_');
      if (parts.size() < 2) syntax_error("slack needs a slot", text);
      int slot = parse_int(parts.back(), text);
      if (slot < 1) syntax_error("slack slots are 1-based", text);
      std::span<const std::string_view> owner(parts.data(), parts.size() - 1);
      if (of_sub) {
        return substitution_slack(parse_substitution_label(owner, text), slot);
      }
      if (owner.size() != 1) syntax_error("bad clause slack name", text);
      int c = parse_int(owner.front(), text);
      if (c < 1) syntax_error("clause numbers are 1-based", text);
      return clause_slack(c - 1, slot);
    }
    default:
      syntax_error("unknown variable prefix", text);
  }
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<VarId> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

bool Monomial::contains(const VarId& v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

bool Monomial::includes(const Monomial& other) const {
  return std::includes(vars_.begin(), vars_.end(), other.vars_.begin(),
                       other.vars_.end());
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.vars_.reserve(a.size() + b.size());
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(),
                 b.vars_.end(), std::back_inserter(out.vars_));
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.vars_ <=> b.vars_;
}

std::string Monomial::to_string() const {
  if (vars_.empty()) return "1";
  std::string out;
  for (const auto& v : vars_) {
    if (!out.empty()) out += '*';
    out += v.name();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(Rational constant) { add_term(Monomial(), constant); }

Polynomial Polynomial::variable(const VarId& v) {
  return term(Monomial({v}), Rational(1));
}

Polynomial Polynomial::term(Monomial m, Rational coefficient) {
  Polynomial p;
  p.add_term(m, coefficient);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& coefficient) {
  if (coefficient == Rational(0)) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == Rational(0)) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t Polynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.size());
  return d;
}

std::set<VarId> Polynomial::variables() const {
  std::set<VarId> out;
  for (const auto& [m, c] : terms_) out.insert(m.vars().begin(), m.vars().end());
  return out;
}

Rational Polynomial::evaluate(const Assignment& assignment) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    bool one = true;
    for (const auto& v : m.vars()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        throw Error(ErrorCode::kMissingVariable,
                    "no value for variable " + v.name());
      }
      if (it->second == 0) one = false;
    }
    if (one) total += c;
  }
  return total;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scale) {
  if (scale == Rational(0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scale;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    Rational mag = c < Rational(0) ? -c : c;
    if (out.empty()) {
      if (c < Rational(0)) out += "-";
    } else {
      out += c < Rational(0) ? " - " : " + ";
    }
    if (m.empty()) {
      out += qdepth::to_string(mag);
    } else {
      if (mag != Rational(1)) out += qdepth::to_string(mag) + "*";
      out += m.to_string();
    }
  }
  return out;
}

namespace {

bool is_name_char(char ch) {
  return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  Polynomial p;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  bool first = true;
  skip_ws();
  if (text.substr(i) == "0") return p;
  while (true) {
    skip_ws();
    if (i >= text.size()) {
      if (first) syntax_error("empty polynomial", text);
      break;
    }
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      syntax_error("expected '+' or '-'", text);
    }
    first = false;

    Rational coefficient(sign);
    std::vector<VarId> vars;
    bool have_factor = false;
    while (true) {
      skip_ws();
      if (i >= text.size()) syntax_error("dangling operator", text);
      std::size_t start = i;
      if (std::isdigit(static_cast<unsigned char>(text[i]))) {
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          ++i;
        std::int64_t num = parse_int(text.substr(start, i - start), text);
        std::int64_t den = 1;
        if (i < text.size() && text[i] == '/') {
          std::size_t dstart = ++i;
          while (i < text.size() &&
                 std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
          den = parse_int(text.substr(dstart, i - dstart), text);
          if (den == 0) syntax_error("zero denominator", text);
        }
        coefficient *= Rational(num, den);
      } else if (std::isalpha(static_cast<unsigned char>(text[i]))) {
        while (i < text.size() && is_name_char(text[i])) ++i;
        vars.push_back(VarId::parse(text.substr(start, i - start)));
      } else {
        syntax_error("unexpected character", text);
      }
      have_factor = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!have_factor) syntax_error("empty term", text);
    p.add_term(Monomial(std::move(vars)), coefficient);
  }
  return p;
}

// ---------------------------------------------------------------------------
// InteractionGraph

InteractionGraph::InteractionGraph(std::set<VarId> vertices,
                                   std::set<Monomial> edges)
    : vertices_(vertices.begin(), vertices.end()),
      edges_(edges.begin(), edges.end()) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) index_[vertices_[i]] = i;
  incidence_.resize(vertices_.size());
  edge_vertices_.reserve(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].size() < 2) {
      throw Error(ErrorCode::kUnknownVertex,
                  "edge " + edges_[e].to_string() + " has fewer than 2 vertices");
    }
    std::vector<std::size_t> ends;
    for (const auto& v : edges_[e].vars()) {
      auto it = index_.find(v);
      if (it == index_.end()) {
        throw Error(ErrorCode::kUnknownVertex,
                    "edge uses unknown vertex " + v.name());
      }
      ends.push_back(it->second);
      incidence_[it->second].push_back(e);
    }
    edge_vertices_.push_back(std::move(ends));
  }
  for (const auto& inc : incidence_) {
    max_degree_ = std::max(max_degree_, inc.size());
  }
}

std::size_t InteractionGraph::vertex_index(const VarId& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) {
    throw Error(ErrorCode::kUnknownVertex, "unknown vertex " + v.name());
  }
  return it->second;
}

std::size_t InteractionGraph::degree(const VarId& v) const {
  return incidence_[vertex_index(v)].size();
}

bool InteractionGraph::is_simple() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Monomial& m) { return m.size() == 2; });
}

InteractionGraph interaction_graph(const Polynomial& p) {
  return interaction_graph(std::span<const Polynomial>(&p, 1));
}

InteractionGraph interaction_graph(std::span<const Polynomial> pieces) {
  std::set<VarId> vertices;
  std::set<Monomial> edges;
  for (const auto& piece : pieces) {
    for (const auto& [m, c] : piece.terms()) {
      vertices.insert(m.vars().begin(), m.vars().end());
      if (m.size() >= 2) edges.insert(m);
    }
  }
  return InteractionGraph(std::move(vertices), std::move(edges));
}

InteractionGraph drop_subsumed_edges(const InteractionGraph& g) {
  std::set<Monomial> kept;
  const auto& edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    // Only edges sharing the first vertex can contain this one.
    bool subsumed = false;
    std::size_t first = g.vertex_index(edges[e].vars().front());
    for (std::size_t f : g.incidence()[first]) {
      if (f != e && edges[f].size() > edges[e].size() &&
          edges[f].includes(edges[e])) {
        subsumed = true;
        break;
      }
    }
    if (!subsumed) kept.insert(edges[e]);
  }
  std::set<VarId> vertices(g.vertices().begin(), g.vertices().end());
  return InteractionGraph(std::move(vertices), std::move(kept));
}

}  // namespace qdepth
