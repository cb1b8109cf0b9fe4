#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "partitions.hpp"
#include "series.hpp"

using namespace rrps;

namespace {

// reference count of partitions of s with parts from {1..n}, by direct
// enumeration over all partitions; independent of the dynamic program in
// euler_factor_inverse
long bounded_part_count(int s, int n) {
  long c = 0;
  for (const auto &p : partitions_of(s))
    if (p.empty() || p.front() <= n) ++c;
  return c;
}

BivariateSeries random_series(std::mt19937 &rng, int cap4) {
  std::uniform_int_distribution<int> nterms(0, 8), c2(-6, 12), w4(0, cap4 + 4),
      num(-9, 9), den(1, 7);
  BivariateSeries s(cap4);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i)
    s.add_term({c2(rng), w4(rng)}, rat(num(rng), den(rng)));
  return s;
}

}  // namespace

TEST_CASE("term storage: zeros dropped, cap enforced") {
  BivariateSeries s(8);
  s.add_term({0, 0}, 1);
  s.add_term({2, 4}, mpq_class(1, 2));
  s.add_term({2, 4}, mpq_class(-1, 2));  // cancels
  s.add_term({0, 12}, 5);                // over cap
  s.add_term({1, 3}, 0);                 // explicit zero
  CHECK(s.term_count() == 1);
  CHECK(s.coeff({0, 0}) == 1);
  CHECK(s.coeff({2, 4}) == 0);
  for (const auto &[d, c] : s.terms()) CHECK(c != 0);
}

TEST_CASE("addition and subtraction") {
  auto a = BivariateSeries::monomial(20, {2, 4}, 3);
  auto b = BivariateSeries::monomial(20, {2, 4}, mpq_class(1, 3));
  CHECK((a + b).coeff({2, 4}) == mpq_class(10, 3));
  CHECK((a - a).empty());
  auto c = BivariateSeries::monomial(12, {0, 0}, 1);
  CHECK_THROWS_AS((void)(a + c), std::invalid_argument);
}

TEST_CASE("multiplication examples") {
  // (1 - q) * (1 + q + q^2 + ... ) = 1 within cap
  int cap = 40;
  BivariateSeries one_minus_q(cap);
  one_minus_q.add_term({0, 0}, 1);
  one_minus_q.add_term({0, 4}, -1);
  CHECK(one_minus_q * euler_factor_inverse(1, cap) == BivariateSeries::one(cap));

  // exponents add on both axes
  auto m1 = BivariateSeries::monomial(cap, {1, 3}, mpq_class(2, 3));
  auto m2 = BivariateSeries::monomial(cap, {2, 5}, mpq_class(3, 4));
  auto p = m1 * m2;
  CHECK(p.term_count() == 1);
  CHECK(p.coeff({3, 8}) == mpq_class(1, 2));

  // truncation: product terms past the cap vanish
  auto hi = BivariateSeries::monomial(10, {0, 8}, 1);
  CHECK((hi * hi).empty());
}

TEST_CASE("multiplication is commutative and associative (randomized)") {
  std::mt19937 rng(20260822);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_series(rng, 30), b = random_series(rng, 30), c = random_series(rng, 30);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("substitute_x_by_xqk") {
  // x^2 q -> x^2 q^5 under k = 1 (weight gains k * charge = 2)
  auto s = BivariateSeries::monomial(100, {4, 4}, 1);
  CHECK(s.substitute_x_by_xqk(1).coeff({4, 12}) == 1);
  CHECK(s.substitute_x_by_xqk(0) == s);
  // half-integer charge: x^(1/2) q^0 -> x^(1/2) q^(1/2) when k = 1
  auto h = BivariateSeries::monomial(100, {1, 0}, 1);
  CHECK(h.substitute_x_by_xqk(1).coeff({1, 2}) == 1);
  // terms pushed past the cap are dropped
  auto e = BivariateSeries::monomial(8, {2, 8}, 1);
  CHECK(e.substitute_x_by_xqk(3).empty());
  CHECK_THROWS_AS(s.substitute_x_by_xqk(-1), std::invalid_argument);
}

TEST_CASE("euler_factor_inverse") {
  CHECK(euler_factor_inverse(0, 40) == BivariateSeries::one(40));
  // 1/(1-q) = all ones
  auto e1 = euler_factor_inverse(1, 24);
  for (int s = 0; s <= 6; ++s) CHECK(e1.coeff({0, 4 * s}) == 1);
  // 1/((1-q)(1-q^2)): q^4 has coefficient 3 (4, 2+2, 2+1+1)
  CHECK(euler_factor_inverse(2, 40).coeff({0, 16}) == 3);
  // against direct partition enumeration with bounded parts
  for (int n = 0; n <= 4; ++n) {
    auto en = euler_factor_inverse(n, 48);
    for (int s = 0; s <= 12; ++s)
      CHECK(en.coeff({0, 4 * s}) == bounded_part_count(s, n));
  }
}

TEST_CASE("rr_sum frozen values") {
  auto f0 = rr_sum(0, 80, 10);
  CHECK(f0.coeff({0, 0}) == 1);
  CHECK(f0.coeff({2, 4}) == 1);   // x q
  CHECK(f0.coeff({2, 12}) == 1);  // x q^3
  CHECK(f0.coeff({4, 24}) == 2);  // x^2 q^6: 5+1, 4+2
  CHECK(f0.coeff({2, 8}) == 1);
  CHECK(f0.coeff({4, 16}) == 1);  // x^2 q^4: only 3+1
  auto f1 = rr_sum(1, 80, 10);
  CHECK(f1.coeff({0, 0}) == 1);
  CHECK(f1.coeff({2, 8}) == 1);   // x q^2
  CHECK(f1.coeff({4, 24}) == 1);  // x^2 q^6: only 4+2
  CHECK(f1.coeff({4, 44}) == 3);  // x^2 q^11: 9+2, 8+3, 7+4
}

TEST_CASE("rr_sum coefficients count gap-2 partitions") {
  // [x^r q^s] rr_sum(0) = diff2_count(s, r, 1) = diff2_count(s + r, r, 2)
  //                     = [x^r q^{s+r}] rr_sum(1)
  auto f0 = rr_sum(0, 60, 20);
  auto f1 = rr_sum(1, 80, 20);
  for (int r = 0; r <= 6; ++r)
    for (int s = 0; s <= 15; ++s) {
      long d1 = diff2_count(s, r, 1);
      CHECK(f0.coeff({2 * r, 4 * s}) == d1);
      CHECK(diff2_count(s + r, r, 2) == d1);
      CHECK(f1.coeff({2 * r, 4 * (s + r)}) == d1);
    }
}

TEST_CASE("rr_product frozen values") {
  auto p14 = rr_product({1, 4}, 80);
  CHECK(p14.coeff({0, 0}) == 1);
  CHECK(p14.coeff({0, 4}) == 1);    // 1
  CHECK(p14.coeff({0, 16}) == 2);   // 4, 1+1+1+1
  auto p23 = rr_product({2, 3}, 80);
  CHECK(p23.coeff({0, 4}) == 0);
  CHECK(p23.coeff({0, 16}) == 1);   // 2+2
  CHECK(p23.coeff({0, 20}) == 1);   // 3+2
  CHECK(p23.coeff({0, 32}) == 3);   // 8, 3+3+2, 2+2+2+2
  CHECK_THROWS_AS(rr_product({1, 2}, 40), std::invalid_argument);
}

TEST_CASE("diff2_count frozen values and cross-enumeration") {
  CHECK(diff2_count(6, 2, 1) == 2);   // 5+1, 4+2
  CHECK(diff2_count(3, 2, 1) == 0);
  CHECK(diff2_count(0, 0, 1) == 1);
  CHECK(diff2_count(0, 1, 1) == 0);
  CHECK(diff2_count(11, 2, 2) == 3);  // 9+2, 8+3, 7+4
  // against an independent filter over all exact partitions
  for (int w = 0; w <= 18; ++w)
    for (int r = 0; r <= 5; ++r)
      for (int m = 1; m <= 2; ++m) {
        long brute = 0;
        for (const auto &p : partitions_exact(w, r, m)) {
          bool ok = true;
          for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (p[i] - p[i + 1] < 2) ok = false;
          if (ok) ++brute;
        }
        CHECK(diff2_count(w, r, m) == brute);
      }
}

TEST_CASE("recursion residual") {
  // constant F = 1: residual is -xq
  auto one = BivariateSeries::one(40);
  auto r = recursion_residual(one);
  CHECK(r.term_count() == 1);
  CHECK(r.coeff({2, 4}) == -1);
  // F = 0
  CHECK(recursion_residual(BivariateSeries(40)).empty());
  // the sum side satisfies the recursion at every cap
  for (int cap : {0, 1, 2, 3, 5, 8, 40, 101, 200})
    CHECK(recursion_residual(rr_sum(0, cap, cap)).empty());
}

TEST_CASE("sum sides specialize to the product sides at x = 1") {
  for (int cap : {40, 120, 200}) {
    CHECK(rr_sum(0, cap, cap).specialize_x1() == rr_product({1, 4}, cap));
    CHECK(rr_sum(1, cap, cap).specialize_x1() == rr_product({2, 3}, cap));
  }
}

TEST_CASE("negative-weight terms are representable") {
  // offsets may shift a series below weight 0 (half-unit prefactors)
  auto s = BivariateSeries::monomial(20, {1, 1}, 1).offset(-1, -1);
  CHECK(s.coeff({0, 0}) == 1);
  auto t = BivariateSeries::monomial(20, {0, 0}, 1).offset(-1, -1);
  CHECK(t.coeff({-1, -1}) == 1);
  CHECK(BivariateSeries::from_json(t.to_json()) == t);
}

TEST_CASE("offset and specialize") {
  auto s = BivariateSeries::monomial(20, {2, 8}, mpq_class(3, 2));
  auto t = s.offset(1, 1);
  CHECK(t.coeff({3, 9}) == mpq_class(3, 2));
  auto u = BivariateSeries::monomial(20, {4, 8}, 1);
  auto v = s + u;
  auto w = v.specialize_x1();
  CHECK(w.coeff({0, 8}) == mpq_class(5, 2));
  CHECK(w.term_count() == 1);
}

TEST_CASE("json round trip is bit-exact") {
  auto f = rr_sum(0, 40, 6);
  auto j = f.to_json();
  auto g = BivariateSeries::from_json(j);
  CHECK(g == f);
  CHECK(g.to_json() == j);

  BivariateSeries empty(12);
  CHECK(BivariateSeries::from_json(empty.to_json()) == empty);
  CHECK(empty.to_json() == R"({"cap4":12,"terms":[]})");

  auto m = BivariateSeries::monomial(8, {1, 3}, mpq_class(-2, 7));
  CHECK(m.to_json() == R"({"cap4":8,"terms":[[1,3,"-2/7"]]})");
  CHECK(BivariateSeries::from_json(m.to_json()) == m);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    auto s = random_series(rng, 24);
    CHECK(BivariateSeries::from_json(s.to_json()).to_json() == s.to_json());
  }

  // non-canonical rationals are canonicalized on read
  auto nc = BivariateSeries::from_json(R"({"cap4":8,"terms":[[0,0,"2/4"]]})");
  CHECK(nc.coeff({0, 0}) == mpq_class(1, 2));

  CHECK_THROWS(BivariateSeries::from_json("not json"));
  CHECK_THROWS(BivariateSeries::from_json(R"({"cap4":"x","terms":[]})"));
  CHECK_THROWS(BivariateSeries::from_json(R"({"cap4":4,"terms":[[0,0]]})"));
}

TEST_CASE("text rendering") {
  CHECK(BivariateSeries(10).to_text() == "0");
  auto s = BivariateSeries::one(20);
  s.add_term({2, 4}, 1);
  s.add_term({4, 16}, -3);
  s.add_term({1, 1}, mpq_class(1, 2));
  CHECK(s.to_text() == "1 + 1/2*x^(1/2)*q^(1/4) + x*q - 3*x^2*q^4");
}

TEST_CASE("partition enumeration order and contents") {
  auto p = partitions_exact(6, 2, 1);
  REQUIRE(p.size() == 3);
  CHECK(p[0] == std::vector<int>{5, 1});
  CHECK(p[1] == std::vector<int>{4, 2});
  CHECK(p[2] == std::vector<int>{3, 3});
  CHECK(partitions_exact(0, 0, 1).size() == 1);
  CHECK(partitions_exact(3, 0, 1).empty());
  CHECK(partitions_exact(5, 2, 2) == std::vector<std::vector<int>>{{3, 2}});
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(9).size() == 30);
}
