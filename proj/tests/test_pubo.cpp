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

#include <random>

#include "doctest.h"
#include "qdepth/error.hpp"
#include "qdepth/pubo.hpp"

namespace qdepth {
namespace {

Polynomial x(int i) { return Polynomial::variable(VarId::problem(i)); }

Polynomial random_polynomial(std::mt19937_64& rng, int num_vars) {
  std::uniform_int_distribution<int> terms(0, 5);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<std::uint32_t> mask(0, (1u << num_vars) - 1);
  Polynomial p;
  for (int t = terms(rng); t > 0; --t) {
    std::vector<VarId> vars;
    std::uint32_t m = mask(rng);
    for (int v = 0; v < num_vars; ++v) {
      if (m >> v & 1) vars.push_back(VarId::problem(v + 1));
    }
    p.add_term(Monomial(vars), Rational(coeff(rng), 1 + (t % 3)));
  }
  return p;
}

Assignment assignment_of(std::uint32_t mask, int num_vars) {
  Assignment a;
  for (int v = 0; v < num_vars; ++v) a[VarId::problem(v + 1)] = mask >> v & 1;
  return a;
}

TEST_CASE("variable names round-trip") {
  std::vector<VarId> ids = {
      VarId::problem(7),
      VarId::clause_indicator(0),
      VarId::clause_slack(3, 2),
      VarId::substitution({1, 3}),
      VarId::substitution({1, 13}),
      VarId::substitution_slack({2, 5}, 1),
      VarId::substitution_slack({4, 12}, 3),
  };
  std::vector<std::string> names = {"x7",  "z1",   "d4_2",    "u13",
                                    "u1_13", "du25_1", "du4_12_3"};
  for (std::size_t k = 0; k < ids.size(); ++k) {
    CHECK(ids[k].name() == names[k]);
    CHECK(VarId::parse(names[k]) == ids[k]);
  }
  CHECK_THROWS_AS(VarId::parse("q3"), Error);
  CHECK_THROWS_AS(VarId::parse("x"), Error);
  CHECK_THROWS_AS(VarId::parse("z0"), Error);
}

TEST_CASE("substitution variables sort before problem variables") {
  Monomial m{VarId::problem(2), VarId::substitution({1, 3})};
  CHECK(m.to_string() == "u13*x2");
}

TEST_CASE("multilinear product and printing") {
  Polynomial p = (Polynomial(1) - x(1)) * (Polynomial(1) - x(2));
  CHECK(p.to_string() == "1 - x1 - x2 + x1*x2");
  CHECK((x(1) * x(1)) == x(1));
  CHECK(Polynomial().to_string() == "0");
  CHECK((x(1) - x(1)).is_zero());
  CHECK((Rational(3, 2) * x(1) * x(2)).to_string() == "3/2*x1*x2");
}

TEST_CASE("evaluate needs every support variable") {
  Polynomial p = x(1) * x(2) + Polynomial(3);
  CHECK(p.evaluate({{VarId::problem(1), 1}, {VarId::problem(2), 1}}) ==
        Rational(4));
  try {
    (void)p.evaluate({{VarId::problem(1), 1}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMissingVariable);
  }
}

TEST_CASE("algebraic laws on random polynomials") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    Polynomial a = random_polynomial(rng, 4);
    Polynomial b = random_polynomial(rng, 4);
    Polynomial c = random_polynomial(rng, 4);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b - b == a);
    for (std::uint32_t m = 0; m < 16; ++m) {
      Assignment s = assignment_of(m, 4);
      Rational va = a.evaluate(s);
      CHECK((a * a).evaluate(s) == va * va);
      CHECK((a * b).evaluate(s) == va * b.evaluate(s));
    }
  }
}

TEST_CASE("text form round-trips") {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 200; ++round) {
    Polynomial p = random_polynomial(rng, 5);
    CHECK(parse_polynomial(p.to_string()) == p);
  }
  CHECK(parse_polynomial("u13*x2 - 2*du13_1 + 1/2") ==
        Polynomial::variable(VarId::substitution({1, 3})) *
                Polynomial::variable(VarId::problem(2)) -
            Polynomial(2) *
                Polynomial::variable(VarId::substitution_slack({1, 3}, 1)) +
            Polynomial(Rational(1, 2)));
  CHECK_THROWS_AS(parse_polynomial("x1 +"), Error);
  CHECK_THROWS_AS(parse_polynomial("2**x1"), Error);
}

TEST_CASE("interaction graph depends on supports only") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 100; ++round) {
    Polynomial p = random_polynomial(rng, 6);
    InteractionGraph g = interaction_graph(p);
    InteractionGraph h = interaction_graph(Rational(-7, 3) * p);
    CHECK(g.edges() == h.edges());
    CHECK(g.vertices() == h.vertices());
  }
}

TEST_CASE("graph degrees count distinct edges") {
  Polynomial p = x(1) * x(2) + x(1) * x(3) + Polynomial(2) * x(2) * x(3) +
                 x(4) + x(1) * x(2) * x(4);
  InteractionGraph g = interaction_graph(p);
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 4);
  CHECK(g.degree(VarId::problem(1)) == 3);
  CHECK(g.degree(VarId::problem(4)) == 1);
  CHECK(g.max_degree() == 3);
  CHECK_FALSE(g.is_simple());
  CHECK_THROWS_AS((void)g.degree(VarId::problem(9)), Error);

  InteractionGraph top = drop_subsumed_edges(g);
  CHECK(top.num_edges() == 3);  // x1*x2 rides on x1*x2*x4
}

TEST_CASE("piece union keeps supports that cancel in the sum") {
  std::vector<Polynomial> pieces = {x(1) * x(2), Polynomial(-1) * x(1) * x(2)};
  CHECK(interaction_graph(pieces[0] + pieces[1]).num_edges() == 0);
  CHECK(interaction_graph(pieces).num_edges() == 1);
}

}  // namespace
}  // namespace qdepth
