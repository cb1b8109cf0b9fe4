#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "checks.hpp"
#include "fock.hpp"
#include "series.hpp"

namespace rrps {

class ComponentStore;

// The two modules whose principal subspaces we compute: `vacuum` is generated
// from 1 (x) e^0, `charged` from 1 (x) e^{a/2}.
enum class Label { vacuum, charged };

const char *label_name(Label l);
std::optional<Label> label_from_name(const std::string &s);

// x_a(-j_1)...x_a(-j_r) applied to the highest weight vector; indices
// descending, each >= 1.  On the charged module every surviving monomial has
// all indices >= 2 (x_a(-1) kills e^{a/2}), so enumeration starts there.
using YMonomial = std::vector<int>;

FockVector highest_weight(Label l);

// spanning monomials of the (r, weight_offset) component, canonical order
std::vector<YMonomial> enumerate_monomials(Label l, int r, int weight_offset);

FockVector realize(Label l, const YMonomial &m);

// grid location of the component with r modes and Fock weight offset s_off
Bidegree component_bidegree(Label l, int r, int s_off);
// inverse; nullopt when bd is off the label's grid
std::optional<std::pair<int, int>> component_params(Label l, Bidegree bd);

// Exact basis data of one bigraded component of a principal subspace: the
// spanning family from the monomials and the unique RREF of its span.
struct GradedComponentBasis {
  Label label = Label::vacuum;
  Bidegree bd;
  std::vector<YMonomial> monomials;
  std::vector<FockVector> spanning;  // realized monomials; not persisted
  std::vector<FockVector> reduced;   // deterministic reduced basis
  std::vector<BasisState> pivots;    // unit-coefficient pivot of each row
  int dim = 0;
};

GradedComponentBasis component_basis(Label l, Bidegree bd);

// coordinates of v in B.reduced (nullopt when outside the span)
std::optional<std::vector<mpq_class>> coords_in_basis(const GradedComponentBasis &B,
                                                      const FockVector &v);

// dense rational matrix of a linear map in the reduced component bases,
// columns indexed by the source basis
struct MapMatrix {
  int rows = 0, cols = 0;
  std::vector<mpq_class> a;  // row-major

  MapMatrix() = default;
  MapMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, mpq_class(0)) {}
  mpq_class &at(int i, int j) { return a[std::size_t(i) * cols + j]; }
  const mpq_class &at(int i, int j) const { return a[std::size_t(i) * cols + j]; }
  bool is_zero() const;
  int rank() const;  // exact Gaussian elimination
  friend MapMatrix operator*(const MapMatrix &x, const MapMatrix &y);
};

// graded character: sum over components of dim * x^{charge} q^{weight},
// modes per monomial bounded by max_charge
BivariateSeries character(ComponentStore &store, Label l, int max_charge, int cap4);

// Matrices of the two maps through the vacuum component at charge r, weight s:
//   e^{a/2} : charged (2r-1, 4s-4r+1)  ->  vacuum (2r, 4s)
//   o       : vacuum (2r, 4s)          ->  charged (2r+1, 4s+1)
// Throws std::logic_error if an image fails to lie in the target span.
std::pair<MapMatrix, MapMatrix> map_matrices(ComponentStore &store, int r, int s);

// dim vacuum(r, s) == dim charged at the translated component (r, s + r)
CheckOutcome verify_shift_relation(ComponentStore &store, int max_charge, int max_weight);

// Exactness of  0 -> charged -> vacuum -> charged -> 0  through every vacuum
// component with weight <= max_weight, charge <= max_charge: composite zero,
// left map injective, right map surjective, exact in the middle.
std::vector<CheckOutcome> verify_exactness(ComponentStore &store, int max_charge,
                                           int max_weight);

// On the computed characters: the half-unit Euler identity
//   X0(x,q) = x^{-1/2} q^{-1/4} X1 + x^{1/2} q^{1/4} X1(xq, q)
// and its corollary X0(x,q) = X0(xq,q) + x q X0(xq^2,q).
std::vector<CheckOutcome> verify_euler(ComponentStore &store, int max_charge,
                                       int max_weight);

}  // namespace rrps
