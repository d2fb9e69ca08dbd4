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

// Multilinear pseudo-Boolean polynomials over typed 0/1 variables and the
// (hyper)graph of variables that share a monomial.

#ifndef QDEPTH_PUBO_HPP_
#define QDEPTH_PUBO_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace qdepth {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);
// Mixed integer equality recurses inside boost::rational under C++20
// rewritten comparisons; compare against Rational(n) instead.
bool operator==(const Rational&, int) = delete;
bool operator==(int, const Rational&) = delete;
bool operator!=(const Rational&, int) = delete;
bool operator!=(int, const Rational&) = delete;
bool operator==(const Rational&, long) = delete;
bool operator==(long, const Rational&) = delete;
bool operator!=(const Rational&, long) = delete;
bool operator!=(long, const Rational&) = delete;
bool operator==(const Rational&, long long) = delete;
bool operator==(long long, const Rational&) = delete;
bool operator!=(const Rational&, long long) = delete;
bool operator!=(long long, const Rational&) = delete;
bool operator==(const Rational&, unsigned) = delete;
bool operator==(unsigned, const Rational&) = delete;
bool operator!=(const Rational&, unsigned) = delete;
bool operator!=(unsigned, const Rational&) = delete;
bool operator==(const Rational&, unsigned long) = delete;
bool operator==(unsigned long, const Rational&) = delete;
bool operator!=(const Rational&, unsigned long) = delete;
bool operator!=(unsigned long, const Rational&) = delete;


// Tag order is also the canonical sort order of variables inside a monomial,
// so substitution variables print first: `u13*x2`.
enum class VarKind : std::uint8_t {
  kSubstitution = 0,
  kProblem = 1,
  kClauseIndicator = 2,
  kSlack = 3,
};

// Identifier of a binary variable.
//
//   x<i>        problem variable i (1-based)
//   u<ij..>     substitution of the listed problem variables
//   z<c>        clause indicator of clause c (printed 1-based)
//   d<c>_<k>    slack k of clause c (printed 1-based)
//   du<ij>_<k>  slack k of substitution u<ij>
//
// Substitution lists print as concatenated digits when every index is a
// single digit (u13) and underscore-separated otherwise (u1_13).
class VarId {
 public:
  static VarId problem(int index);
  static VarId clause_indicator(int clause);
  static VarId substitution(std::vector<int> vars);
  static VarId clause_slack(int clause, int slot);
  static VarId substitution_slack(std::vector<int> vars, int slot);

  // Inverse of name(). Throws Error(kSyntaxError) on malformed input.
  static VarId parse(std::string_view text);

  VarKind kind() const noexcept { return kind_; }
  bool is_substitution_slack() const noexcept {
    return kind_ == VarKind::kSlack && slack_of_substitution_;
  }
  // Problem index, or clause index for indicators and clause slacks.
  int index() const;
  // Substituted variables, also for substitution slacks.
  std::span<const int> substituted() const;
  int slot() const noexcept { return slot_; }

  std::string name() const;

  friend auto operator<=>(const VarId&, const VarId&) = default;
  friend bool operator==(const VarId&, const VarId&) = default;

 private:
  VarId(VarKind kind, bool slack_of_substitution, std::vector<int> payload,
        int slot)
      : kind_(kind),
        slack_of_substitution_(slack_of_substitution),
        payload_(std::move(payload)),
        slot_(slot) {}

  VarKind kind_ = VarKind::kProblem;
  bool slack_of_substitution_ = false;
  std::vector<int> payload_;
  int slot_ = 0;
};

// Sorted, duplicate-free set of variables. The empty monomial is the
// constant term. Monomials order by size first, then lexicographically.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<VarId> vars);
  Monomial(std::initializer_list<VarId> vars)
      : Monomial(std::vector<VarId>(vars)) {}

  const std::vector<VarId>& vars() const noexcept { return vars_; }
  std::size_t size() const noexcept { return vars_.size(); }
  bool empty() const noexcept { return vars_.empty(); }
  bool contains(const VarId& v) const;
  bool includes(const Monomial& other) const;

  // Set union, i.e. the multilinear product x*x = x.
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<VarId> vars_;
};

using Assignment = std::map<VarId, int>;

// Exact multilinear polynomial. Zero coefficients are never stored, so two
// polynomials are equal iff their term maps are equal.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(Rational constant);  // NOLINT(google-explicit-constructor)
  Polynomial(std::int64_t constant)  // NOLINT(google-explicit-constructor)
      : Polynomial(Rational(constant)) {}

  static Polynomial variable(const VarId& v);
  static Polynomial term(Monomial m, Rational coefficient);

  void add_term(const Monomial& m, const Rational& coefficient);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;
  std::size_t degree() const;
  std::set<VarId> variables() const;

  // Throws Error(kMissingVariable) when a support variable is unassigned.
  Rational evaluate(const Assignment& assignment) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scale);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) {
    return a *= s;
  }
  friend Polynomial operator*(const Rational& s, Polynomial a) {
    return a *= s;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // `1 - x1 - x2 + x1*x2`; the zero polynomial prints as `0`.
  std::string to_string() const;

 private:
  TermMap terms_;
};

// Reads the to_string() form back. Accepts integer or p/q coefficients
// (`-3/2*x1*x2`). Throws Error(kSyntaxError).
Polynomial parse_polynomial(std::string_view text);

// Vertices are variables; each distinct support of size >= 2 is an edge
// (size 2) or hyperedge (size >= 3).
class InteractionGraph {
 public:
  InteractionGraph() = default;
  InteractionGraph(std::set<VarId> vertices, std::set<Monomial> edges);

  const std::vector<VarId>& vertices() const noexcept { return vertices_; }
  const std::vector<Monomial>& edges() const noexcept { return edges_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  bool contains(const VarId& v) const { return index_.contains(v); }
  std::size_t vertex_index(const VarId& v) const;

  // Number of distinct edges containing v. Throws Error(kUnknownVertex).
  std::size_t degree(const VarId& v) const;
  std::size_t max_degree() const noexcept { return max_degree_; }
  bool is_simple() const noexcept;

  // Edge indices incident to each vertex, indexed like vertices().
  const std::vector<std::vector<std::size_t>>& incidence() const noexcept {
    return incidence_;
  }

  // Edge endpoints as vertex indices, indexed like edges().
  const std::vector<std::vector<std::size_t>>& edge_vertices() const noexcept {
    return edge_vertices_;
  }

 private:
  std::vector<VarId> vertices_;
  std::vector<Monomial> edges_;
  std::map<VarId, std::size_t> index_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::vector<std::vector<std::size_t>> edge_vertices_;
  std::size_t max_degree_ = 0;
};

InteractionGraph interaction_graph(const Polynomial& p);

// Union of the supports of several polynomials. Summing pieces first can
// cancel coefficients between pieces, which removes gates the formulation
// still implies; the derived graph is defined on the pieces.
InteractionGraph interaction_graph(std::span<const Polynomial> pieces);

// Keeps only maximal edges (those not contained in another edge). Models
// hardware with native k-qubit gates, where a pair term can ride along with
// the k-qubit gate covering it.
InteractionGraph drop_subsumed_edges(const InteractionGraph& g);

}  // namespace qdepth

#endif  // QDEPTH_PUBO_HPP_
