#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bigrade.hpp"
#include "rational.hpp"

namespace rrps {

// Basis state h(-p_1)...h(-p_r) . e^{k a/2} of the lattice Fock space
// M(1) (x) C[P], P = (1/2) Z a with <a,a> = 2.  h(n) is the mode a(n) of the
// rank-one Heisenberg algebra at level 1, parts stored descending.
struct BasisState {
  std::vector<int> parts;  // descending, each >= 1
  int k = 0;               // lattice exponent in units of a/2

  int parts_weight() const {
    int w = 0;
    for (int p : parts) w += p;
    return w;
  }
  // conformal weight of e^{k a/2} is k^2/4, each h(-p) adds p
  Bidegree bidegree() const { return {k, 4 * parts_weight() + k * k}; }

  friend bool operator==(const BasisState &, const BasisState &) = default;
  friend bool operator<(const BasisState &a, const BasisState &b) {
    if (a.parts != b.parts) return a.parts < b.parts;
    return a.k < b.k;
  }
};

// sparse vector over the basis; no zero coefficients stored
using FockVector = std::map<BasisState, mpq_class>;

void add_term(FockVector &v, const BasisState &s, const mpq_class &c);
FockVector scale(const FockVector &v, const mpq_class &c);
FockVector add(FockVector a, const FockVector &b);

// bidegree if v is nonzero and homogeneous, nullopt otherwise
std::optional<Bidegree> bidegree_of(const FockVector &v);

// 1 (x) e^{k a/2}
FockVector unit_state(int k);

// h(n): n < 0 creates a part, n > 0 kills one ([h(m), h(-m)] = 2m at level 1),
// n = 0 multiplies each state by its lattice pairing <a, k a/2> = k
FockVector heis_act(int n, const FockVector &v);

// left multiplication by e^{halfsteps * a/2} on the lattice factor
FockVector lattice_shift(int halfsteps, const FockVector &v);

// Coefficient of x^{power2/2} in Y(1 (x) e^{lam_half * a/2}, x) v, where
//   Y(1 (x) e^l, x) = E^-(-l, x) E^+(-l, x) e^l x^l.
// Finite for any fixed power because E^+ can only kill the finitely many
// parts of each state.
FockVector vertex_component(int lam_half, int power2, const FockVector &v);

// x_a(m): coefficient of x^{-m-1} in Y(1 (x) e^a, x)
FockVector x_alpha(int m, const FockVector &v);

// sum_{i+j=n} x_a(i) x_a(j) v.  Only j <= J(state) survive termwise, where
// J = (weight4 - (k+2)^2) / 4 is the largest mode not annihilating the state,
// so the sum is finite; it vanishes identically because Y(1 (x) e^a, x)^2 = 0.
FockVector square_sum(int n, const FockVector &v);

// (-1)^{k/2} on each state; domain: even-lattice vectors (all k even)
FockVector phase_on_vq(const FockVector &v);

// Constant term of the intertwiner Y(1 (x) e^{a/2}, x) composed with the
// phase above, mapping the even lattice part to the odd one.
// Domain: all k even.
FockVector o_operator(const FockVector &v);

// e^{a/2}: plain lattice translation
FockVector e_half(const FockVector &v);

// {"terms":[{"parts":[...],"k":n,"coeff":"num/den"},...]} in basis order;
// bit-exact round trip
std::string fock_to_json(const FockVector &v);
FockVector fock_from_json(const std::string &text);

std::string fock_to_text(const FockVector &v);

}  // namespace rrps
