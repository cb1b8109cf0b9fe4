#pragma once

#include <map>
#include <string>
#include <vector>

#include "checks.hpp"
#include "principal.hpp"
#include "series.hpp"

namespace rrps {

class ComponentStore;

// Polynomial shadow of the vacuum principal subspace: the free commutative
// ring C[y_{-1}, y_{-2}, ...] with y_{-j} standing for x_a(-j), graded by
// (number of variables, total weight).  Monomials reuse YMonomial (descending
// index lists); polynomials are sparse maps in graded-lex monomial order.
struct YMonomialLess {
  bool operator()(const YMonomial &a, const YMonomial &b) const {
    int wa = 0, wb = 0;
    for (int i : a) wa += i;
    for (int i : b) wb += i;
    if (wa != wb) return wa < wb;
    return a < b;
  }
};

using YPolynomial = std::map<YMonomial, mpq_class, YMonomialLess>;

int ymonomial_weight(const YMonomial &m);
void ypoly_add_term(YPolynomial &p, const YMonomial &m, const mpq_class &c);
YPolynomial ypoly_add(YPolynomial a, const YPolynomial &b);
YPolynomial ypoly_scale(const YPolynomial &p, const mpq_class &c);
YPolynomial monomial_times(const YMonomial &m, const YPolynomial &p);

// canonical plain-text form, e.g. "y(-2)^2 + 2*y(-3)*y(-1)"
std::string ypoly_to_text(const YPolynomial &p);

// r_n = sum_{i,j <= -1, i+j = n} y_i y_j for n <= -2; the quadratic relations
// satisfied by the modes (r_{-2} = y_{-1}^2, r_{-3} = 2 y_{-2} y_{-1}, ...)
YPolynomial relation(int n);

// one spanning element m * r_n of an ideal component
struct IdealGenerator {
  YMonomial cofactor;
  int n = -2;
  YPolynomial poly;
};

// exhaustive spanning family of the ideal component with r variables and
// weight s: cofactors of weight s - N in r - 2 variables against r_{-N}
std::vector<IdealGenerator> ideal_component_generators(int r, int s);
std::vector<YPolynomial> ideal_component_span(int r, int s);

// graded dimensions of C[y]/(ideal), same grid as the vacuum character:
// #monomials(r, s) - rank(span(r, s)) at bidegree (2r, 4s)
BivariateSeries hilbert_series(int max_charge, int cap4);

// algebra endomorphism y_{-1} -> 0, y_{-j} -> y_{-j+1} (j >= 2)
YPolynomial shift_S(const YPolynomial &p);

// S(r_n) = r_{n+2} for n <= -4; S kills r_{-2} and r_{-3}
CheckOutcome verify_relation_shift(int n_min);

// The ideal is S-stable, witnessed two ways on every component in range:
// each generator's image under S reduces to zero against the target span,
// and each generator is S of an explicit generator two weights up.
std::vector<CheckOutcome> verify_S_stability(int max_charge, int max_weight);

// hilbert_series agrees with the vacuum character on the window
CheckOutcome cross_check_hilbert(ComponentStore &store, int max_charge, int max_weight);

}  // namespace rrps
