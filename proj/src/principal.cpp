#include "principal.hpp"

#include <stdexcept>

#include "cache.hpp"
#include "partitions.hpp"
#include "rref.hpp"

namespace rrps {

const char *label_name(Label l) { return l == Label::vacuum ? "vacuum" : "charged"; }

std::optional<Label> label_from_name(const std::string &s) {
  if (s == "vacuum") return Label::vacuum;
  if (s == "charged") return Label::charged;
  return std::nullopt;
}

FockVector highest_weight(Label l) { return unit_state(l == Label::vacuum ? 0 : 1); }

std::vector<YMonomial> enumerate_monomials(Label l, int r, int weight_offset) {
  return partitions_exact(weight_offset, r, l == Label::vacuum ? 1 : 2);
}

FockVector realize(Label l, const YMonomial &m) {
  FockVector v = highest_weight(l);
  // modes commute; apply the small ones first to keep intermediates short
  for (auto it = m.rbegin(); it != m.rend(); ++it) v = x_alpha(-*it, v);
  return v;
}

Bidegree component_bidegree(Label l, int r, int s_off) {
  // each x_a(-j) moves a state by (+2, +4j)
  if (l == Label::vacuum) return {2 * r, 4 * s_off};
  return {2 * r + 1, 4 * s_off + 1};
}

std::optional<std::pair<int, int>> component_params(Label l, Bidegree bd) {
  if (l == Label::vacuum) {
    if (bd.charge2 % 2 != 0 || ((bd.weight4 % 4) + 4) % 4 != 0) return std::nullopt;
    return std::pair{bd.charge2 / 2, floor_div(bd.weight4, 4)};
  }
  if (((bd.charge2 % 2) + 2) % 2 != 1 || ((bd.weight4 % 4) + 4) % 4 != 1)
    return std::nullopt;
  return std::pair{(bd.charge2 - 1) / 2, (bd.weight4 - 1) / 4};
}

GradedComponentBasis component_basis(Label l, Bidegree bd) {
  auto params = component_params(l, bd);
  if (!params)
    throw std::invalid_argument(std::string("component_basis: ") + to_string(bd) +
                                " is not on the " + label_name(l) + " grid");
  auto [r, s_off] = *params;
  GradedComponentBasis B;
  B.label = l;
  B.bd = bd;
  B.monomials = enumerate_monomials(l, r, s_off);
  RowSpace<BasisState> space;
  for (const auto &m : B.monomials) {
    FockVector v = realize(l, m);
    auto d = bidegree_of(v);
    if (d && *d != bd)
      throw std::logic_error("component_basis: realized monomial off its bidegree");
    B.spanning.push_back(v);
    space.insert(std::move(v));
  }
  B.reduced = space.rows();
  B.pivots = space.pivots();
  B.dim = int(space.dim());
  return B;
}

std::optional<std::vector<mpq_class>> coords_in_basis(const GradedComponentBasis &B,
                                                      const FockVector &v) {
  std::vector<mpq_class> c(B.reduced.size(), 0);
  FockVector rem = v;
  for (std::size_t i = 0; i < B.reduced.size(); ++i) {
    auto it = rem.find(B.pivots[i]);
    if (it == rem.end()) continue;
    c[i] = it->second;  // reduced rows have unit pivot coefficients
    RowSpace<BasisState>::axpy(rem, -c[i], B.reduced[i]);
  }
  if (!rem.empty()) return std::nullopt;
  return c;
}

bool MapMatrix::is_zero() const {
  for (const auto &x : a)
    if (x != 0) return false;
  return true;
}

int MapMatrix::rank() const {
  MapMatrix m = *this;
  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int p = -1;
    for (int i = rk; i < rows; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != rk)
      for (int j = c; j < cols; ++j) std::swap(m.at(p, j), m.at(rk, j));
    mpq_class inv = 1 / m.at(rk, c);
    for (int j = c; j < cols; ++j) m.at(rk, j) *= inv;
    for (int i = rk + 1; i < rows; ++i) {
      mpq_class f = m.at(i, c);
      if (f == 0) continue;
      for (int j = c; j < cols; ++j) m.at(i, j) -= f * m.at(rk, j);
    }
    ++rk;
  }
  return rk;
}

MapMatrix operator*(const MapMatrix &x, const MapMatrix &y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix product shape mismatch");
  MapMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

BivariateSeries character(ComponentStore &store, Label l, int max_charge, int cap4) {
  BivariateSeries out(cap4);
  for (int r = 0; r <= max_charge; ++r) {
    // minimal Fock weight of r modes: r for the vacuum module, 2r charged
    int smin = (l == Label::vacuum) ? r : 2 * r;
    for (int s = smin;; ++s) {
      if (r == 0 && s > 0) break;
      Bidegree bd = component_bidegree(l, r, s);
      if (bd.weight4 > cap4) break;
      auto B = store.get(l, bd);
      if (B->dim) out.add_term(bd, B->dim);
    }
  }
  return out;
}

std::pair<MapMatrix, MapMatrix> map_matrices(ComponentStore &store, int r, int s) {
  Bidegree b0{2 * r, 4 * s};
  // e^{a/2} moves (c2, w4) to (c2 + 1, w4 + 2 c2 + 1); o moves it by (+1, +1)
  Bidegree bsrc{2 * r - 1, 4 * s - 4 * r + 1};
  Bidegree btgt{2 * r + 1, 4 * s + 1};
  auto B0 = store.get(Label::vacuum, b0);
  auto Bsrc = store.get(Label::charged, bsrc);
  auto Btgt = store.get(Label::charged, btgt);
  MapMatrix Me(B0->dim, Bsrc->dim), Mo(Btgt->dim, B0->dim);
  for (int j = 0; j < Bsrc->dim; ++j) {
    auto c = coords_in_basis(*B0, e_half(Bsrc->reduced[j]));
    if (!c)
      throw std::logic_error("map_matrices: e^{a/2} image escapes the vacuum span at " +
                             to_string(b0));
    for (int i = 0; i < B0->dim; ++i) Me.at(i, j) = (*c)[i];
  }
  for (int j = 0; j < B0->dim; ++j) {
    auto c = coords_in_basis(*Btgt, o_operator(B0->reduced[j]));
    if (!c)
      throw std::logic_error("map_matrices: o image escapes the charged span at " +
                             to_string(btgt));
    for (int i = 0; i < Btgt->dim; ++i) Mo.at(i, j) = (*c)[i];
  }
  return {Me, Mo};
}

CheckOutcome verify_shift_relation(ComponentStore &store, int max_charge, int max_weight) {
  const char *name = "shift-relation-dimensions";
  for (int r = 0; r <= max_charge; ++r)
    for (int s = 0; s <= max_weight; ++s) {
      int d0 = store.get(Label::vacuum, component_bidegree(Label::vacuum, r, s))->dim;
      int d1 = store.get(Label::charged, component_bidegree(Label::charged, r, s + r))->dim;
      if (d0 != d1)
        return CheckOutcome::fail(
            name, component_bidegree(Label::vacuum, r, s),
            "vacuum dim " + std::to_string(d0) + " != charged dim " + std::to_string(d1) +
                " at translated component (" + std::to_string(r) + ", " +
                std::to_string(s + r) + ")");
    }
  return CheckOutcome::ok(name);
}

std::vector<CheckOutcome> verify_exactness(ComponentStore &store, int max_charge,
                                           int max_weight) {
  CheckOutcome composite = CheckOutcome::ok("exactness-composite-zero");
  CheckOutcome inj = CheckOutcome::ok("exactness-left-injective");
  CheckOutcome surj = CheckOutcome::ok("exactness-right-surjective");
  CheckOutcome middle = CheckOutcome::ok("exactness-middle-kernel");
  for (int s = 0; s <= max_weight; ++s)
    for (int r = 0; r <= std::min(max_charge, s); ++r) {
      Bidegree b0{2 * r, 4 * s};
      std::pair<MapMatrix, MapMatrix> ms;
      try {
        ms = map_matrices(store, r, s);
      } catch (const std::logic_error &e) {
        if (composite.pass) composite = CheckOutcome::fail("exactness-composite-zero", b0, e.what());
        continue;
      }
      const auto &[Me, Mo] = ms;
      int re = Me.rank(), ro = Mo.rank();
      std::string dims = "dims " + std::to_string(Me.cols) + " -> " +
                         std::to_string(Me.rows) + " -> " + std::to_string(Mo.rows) +
                         ", rank e = " + std::to_string(re) +
                         ", rank o = " + std::to_string(ro);
      if (composite.pass && !(Mo * Me).is_zero())
        composite = CheckOutcome::fail("exactness-composite-zero", b0, dims);
      if (inj.pass && re != Me.cols)
        inj = CheckOutcome::fail("exactness-left-injective", b0, dims);
      if (surj.pass && ro != Mo.rows)
        surj = CheckOutcome::fail("exactness-right-surjective", b0, dims);
      if (middle.pass && re != Me.rows - ro)
        middle = CheckOutcome::fail("exactness-middle-kernel", b0, dims);
    }
  return {composite, inj, surj, middle};
}

std::vector<CheckOutcome> verify_euler(ComponentStore &store, int max_charge,
                                       int max_weight) {
  // the charged character far enough out to cover both uses below
  BivariateSeries x0 = character(store, Label::vacuum, max_charge, 4 * max_weight);
  BivariateSeries x1 =
      character(store, Label::charged, max_charge, 4 * (max_weight + max_charge) + 1);

  CheckOutcome euler = CheckOutcome::ok("euler-identity-characters");
  CheckOutcome cor = CheckOutcome::ok("character-recursion-corollary");
  for (int c2 = 0; c2 <= 2 * max_charge + 1 && euler.pass; ++c2)
    for (int w4 = 0; w4 <= 4 * max_weight; ++w4) {
      // X0 = x^{-1/2} q^{-1/4} X1 + x^{1/2} q^{1/4} X1(xq, q), coefficientwise
      mpq_class lhs = x0.coeff({c2, w4});
      mpq_class rhs = x1.coeff({c2 + 1, w4 + 1}) +
                      x1.coeff({c2 - 1, w4 - 1 - 2 * (c2 - 1)});
      if (lhs != rhs) {
        euler = CheckOutcome::fail("euler-identity-characters", Bidegree{c2, w4},
                                   "lhs " + rat_str(lhs) + " != rhs " + rat_str(rhs));
        break;
      }
    }
  for (int c2 = 0; c2 <= 2 * max_charge && cor.pass; ++c2)
    for (int w4 = 0; w4 <= 4 * max_weight; ++w4) {
      // X0(x) = X0(xq) + x q X0(xq^2)
      mpq_class lhs = x0.coeff({c2, w4});
      mpq_class rhs = x0.coeff({c2, w4 - 2 * c2}) +
                      x0.coeff({c2 - 2, w4 - 4 - 4 * (c2 - 2)});
      if (lhs != rhs) {
        cor = CheckOutcome::fail("character-recursion-corollary", Bidegree{c2, w4},
                                 "lhs " + rat_str(lhs) + " != rhs " + rat_str(rhs));
        break;
      }
    }
  return {euler, cor};
}

}  // namespace rrps
