#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "cache.hpp"
#include "ideal.hpp"
#include "partitions.hpp"

using namespace rrps;

TEST_CASE("polynomial term order and text form") {
  YPolynomial p;
  ypoly_add_term(p, {3, 1}, 2);
  ypoly_add_term(p, {2, 2}, 1);
  // same weight: lex on the descending index lists, so y(-2)^2 first
  CHECK(ypoly_to_text(p) == "y(-2)^2 + 2*y(-3)*y(-1)");
  ypoly_add_term(p, {2, 2}, -1);
  CHECK(ypoly_to_text(p) == "2*y(-3)*y(-1)");
  CHECK(ypoly_to_text(YPolynomial{}) == "0");
  CHECK(ymonomial_weight({3, 1}) == 4);
  CHECK(ymonomial_weight({}) == 0);
}

TEST_CASE("polynomial arithmetic") {
  YPolynomial a, b;
  ypoly_add_term(a, {1}, 1);
  ypoly_add_term(b, {1}, rat(1, 2));
  ypoly_add_term(b, {2}, 3);
  auto s = ypoly_add(a, b);
  CHECK(ypoly_to_text(s) == "3/2*y(-1) + 3*y(-2)");
  CHECK(ypoly_to_text(ypoly_scale(s, rat(2, 3))) == "y(-1) + 2*y(-2)");
  CHECK(ypoly_to_text(ypoly_scale(s, 0)) == "0");
  auto t = monomial_times({2}, s);
  CHECK(ypoly_to_text(t) == "3/2*y(-2)*y(-1) + 3*y(-2)^2");
}

TEST_CASE("quadratic relations, written out") {
  CHECK(ypoly_to_text(relation(-2)) == "y(-1)^2");
  CHECK(ypoly_to_text(relation(-3)) == "2*y(-2)*y(-1)");
  CHECK(ypoly_to_text(relation(-4)) == "y(-2)^2 + 2*y(-3)*y(-1)");
  CHECK(ypoly_to_text(relation(-5)) == "2*y(-3)*y(-2) + 2*y(-4)*y(-1)");
  CHECK(ypoly_to_text(relation(-6)) == "y(-3)^2 + 2*y(-4)*y(-2) + 2*y(-5)*y(-1)");
  CHECK_THROWS_AS(relation(-1), std::invalid_argument);
  CHECK_THROWS_AS(relation(0), std::invalid_argument);
}

TEST_CASE("ideal component spanning families") {
  CHECK(ideal_component_generators(0, 0).empty());
  CHECK(ideal_component_generators(1, 3).empty());
  auto g22 = ideal_component_generators(2, 2);
  REQUIRE(g22.size() == 1);
  CHECK(g22[0].cofactor.empty());
  CHECK(g22[0].n == -2);
  CHECK(ypoly_to_text(g22[0].poly) == "y(-1)^2");
  // weight 5 in three variables: cofactor weight 5 - N for N = 2, 3, 4
  auto g35 = ideal_component_generators(3, 5);
  REQUIRE(g35.size() == 3);
  CHECK(g35[0].cofactor == YMonomial{3});
  CHECK(g35[0].n == -2);
  CHECK(g35[1].cofactor == YMonomial{2});
  CHECK(g35[1].n == -3);
  CHECK(g35[2].cofactor == YMonomial{1});
  CHECK(g35[2].n == -4);
  CHECK(ypoly_to_text(g35[2].poly) == "y(-2)^2*y(-1) + 2*y(-3)*y(-1)^2");
  CHECK(ideal_component_span(3, 5).size() == 3);
}

TEST_CASE("quotient dimensions match the gap-partition count") {
  BivariateSeries h = hilbert_series(3, 44);
  CHECK(h.coeff({0, 0}) == 1);
  for (int r = 1; r <= 3; ++r)
    for (int s = r; s <= 11; ++s)
      CHECK(h.coeff({2 * r, 4 * s}) == diff2_count(s, r, 1));
  // (2, 6): three monomials, one relation r_{-6} of rank one
  CHECK(h.coeff({4, 24}) == 2);
  CHECK(h.coeff({2, 4}) == 1);
  CHECK(h.coeff({6, 36}) == 1);
}

TEST_CASE("shift endomorphism on polynomials") {
  YPolynomial p;
  ypoly_add_term(p, {2, 2}, 1);
  ypoly_add_term(p, {3, 1}, 5);
  // y(-1) factors die, all other indices step down by one
  CHECK(ypoly_to_text(shift_S(p)) == "y(-1)^2");
  CHECK(shift_S(relation(-2)).empty());
  CHECK(shift_S(relation(-3)).empty());
  CHECK(shift_S(relation(-4)) == relation(-2));
  CHECK(shift_S(relation(-6)) == relation(-4));
  // S is an algebra map: S(m r) = S(m) S(r)
  auto lhs = shift_S(monomial_times({4, 2}, relation(-5)));
  auto rhs = monomial_times({3, 1}, relation(-3));
  CHECK(lhs == rhs);
}

TEST_CASE("relations shift onto relations") {
  auto c = verify_relation_shift(-12);
  INFO(c.detail);
  CHECK(c.pass);
  CHECK(c.name == "relation-shift-identity");
}

TEST_CASE("the ideal is stable under the shift, with preimages") {
  auto outcomes = verify_S_stability(4, 12);
  REQUIRE(outcomes.size() == 2);
  CHECK(outcomes[0].name == "ideal-shift-into-ideal");
  CHECK(outcomes[1].name == "ideal-shift-preimage");
  for (const auto &c : outcomes) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.pass);
  }
}

TEST_CASE("quotient dimensions agree with the vacuum character") {
  ComponentStore store;
  auto c = cross_check_hilbert(store, 3, 8);
  INFO(c.detail);
  CHECK(c.pass);
  CHECK(c.name == "hilbert-matches-character");
}
