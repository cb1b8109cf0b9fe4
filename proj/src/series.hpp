#pragma once

#include <map>
#include <set>
#include <string>

#include "bigrade.hpp"
#include "rational.hpp"

namespace rrps {

// Truncated bivariate series sum c_{r,s} x^r q^s with r on the half-integer
// grid (charge2 = 2r) and s on the quarter-integer grid (weight4 = 4s).
// Terms with weight4 > cap4 are discarded; zero coefficients are never stored.
// Arithmetic between series requires equal caps.  Coefficients must be in
// canonical form (mpq_class(n, d) does not reduce; see rat()).
//
// Truncation commutes with products of series whose weights are all
// nonnegative; with negative weights an over-cap intermediate term could
// re-enter the window later, so associativity only holds on the
// nonnegative-weight domain.  Everything computed here lives there.
class BivariateSeries {
 public:
  explicit BivariateSeries(int cap4 = 0) : cap4_(cap4) {}

  static BivariateSeries monomial(int cap4, Bidegree d, const mpq_class &c);
  static BivariateSeries one(int cap4) { return monomial(cap4, {0, 0}, 1); }

  int cap4() const { return cap4_; }
  const std::map<Bidegree, mpq_class> &terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  mpq_class coeff(Bidegree d) const;
  void add_term(Bidegree d, const mpq_class &c);

  BivariateSeries operator-() const;
  BivariateSeries &operator+=(const BivariateSeries &o);
  BivariateSeries &operator-=(const BivariateSeries &o);
  friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries &b) { return a += b; }
  friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries &b) { return a -= b; }
  friend BivariateSeries operator*(const BivariateSeries &a, const BivariateSeries &b);
  friend bool operator==(const BivariateSeries &, const BivariateSeries &) = default;

  // x -> x q^k (k >= 0): each term x^r q^s becomes x^r q^{s + k r}.
  BivariateSeries substitute_x_by_xqk(int k) const;

  // multiply by the monomial x^{dc2/2} q^{dw4/4}
  BivariateSeries offset(int dcharge2, int dweight4) const;

  // set x = 1: collapse each weight column to charge2 = 0
  BivariateSeries specialize_x1() const;

  // change the truncation cap, discarding overflowing terms on a decrease
  BivariateSeries with_cap(int new_cap4) const;

  // {"cap4": n, "terms": [[charge2, weight4, "num/den"], ...]} sorted by
  // (weight4, charge2); round-trips bit-exactly
  std::string to_json() const;
  static BivariateSeries from_json(const std::string &text);

  // human-readable polynomial with fractional exponents written out
  std::string to_text() const;

 private:
  int cap4_;
  std::map<Bidegree, mpq_class> terms_;
};

// 1 / ((1-q)(1-q^2)...(1-q^n)) truncated at cap4; n = 0 gives 1.
BivariateSeries euler_factor_inverse(int n, int cap4);

// sum_{n >= 0} x^n q^{n^2 + a n} / (q)_n for a in {0, 1}, truncated at cap4,
// with n <= max_charge.  The charged-module half-unit prefactor is not
// included; callers attach it as offset(1, 1).
BivariateSeries rr_sum(int a, int cap4, int max_charge);

// prod 1/(1 - q^p) over parts p congruent to one of `residues` mod 5;
// residues must be {1,4} or {2,3}
BivariateSeries rr_product(const std::set<int> &residues, int cap4);

// F(x,q) - F(xq,q) - x q F(xq^2,q) within F's cap
BivariateSeries recursion_residual(const BivariateSeries &f);

}  // namespace rrps
