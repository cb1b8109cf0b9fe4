#include "ideal.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "cache.hpp"
#include "partitions.hpp"
#include "rref.hpp"

namespace rrps {

int ymonomial_weight(const YMonomial &m) {
  int w = 0;
  for (int i : m) w += i;
  return w;
}

void ypoly_add_term(YPolynomial &p, const YMonomial &m, const mpq_class &c) {
  if (c == 0) return;
  auto [it, inserted] = p.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

YPolynomial ypoly_add(YPolynomial a, const YPolynomial &b) {
  for (const auto &[m, c] : b) ypoly_add_term(a, m, c);
  return a;
}

YPolynomial ypoly_scale(const YPolynomial &p, const mpq_class &c) {
  YPolynomial r;
  if (c == 0) return r;
  for (const auto &[m, v] : p) r.emplace(m, v * c);
  return r;
}

YPolynomial monomial_times(const YMonomial &m, const YPolynomial &p) {
  YPolynomial r;
  for (const auto &[mm, c] : p) {
    YMonomial prod;
    prod.reserve(m.size() + mm.size());
    std::merge(m.begin(), m.end(), mm.begin(), mm.end(), std::back_inserter(prod),
               std::greater<int>());
    r.emplace(std::move(prod), c);
  }
  return r;
}

std::string ypoly_to_text(const YPolynomial &p) {
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto &[m, c] : p) {
    mpq_class a = abs(c);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    std::string factors;
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      if (!factors.empty()) factors += "*";
      factors += "y(-" + std::to_string(m[i]) + ")";
      if (j - i > 1) factors += "^" + std::to_string(j - i);
      i = j;
    }
    if (factors.empty())
      out += rat_str(a);
    else if (a == 1)
      out += factors;
    else
      out += rat_str(a) + "*" + factors;
  }
  return out;
}

YPolynomial relation(int n) {
  if (n > -2) throw std::invalid_argument("relation: n must be <= -2");
  YPolynomial r;
  int N = -n;
  for (int i = 1; i <= N - 1; ++i) {
    YMonomial m{std::max(i, N - i), std::min(i, N - i)};
    ypoly_add_term(r, m, 1);
  }
  return r;
}

std::vector<IdealGenerator> ideal_component_generators(int r, int s) {
  std::vector<IdealGenerator> out;
  if (r < 2) return out;
  for (int N = 2; N <= s; ++N)
    for (const auto &m : partitions_exact(s - N, r - 2, 1)) {
      IdealGenerator g;
      g.cofactor = m;
      g.n = -N;
      g.poly = monomial_times(m, relation(-N));
      out.push_back(std::move(g));
    }
  return out;
}

std::vector<YPolynomial> ideal_component_span(int r, int s) {
  std::vector<YPolynomial> out;
  for (auto &g : ideal_component_generators(r, s)) out.push_back(std::move(g.poly));
  return out;
}

BivariateSeries hilbert_series(int max_charge, int cap4) {
  BivariateSeries out(cap4);
  for (int r = 0; r <= max_charge; ++r)
    for (int s = r;; ++s) {
      if (r == 0 && s > 0) break;
      if (4 * s > cap4) break;
      long monos = long(partitions_exact(s, r, 1).size());
      RowSpace<YMonomial, YMonomialLess> space;
      for (auto &p : ideal_component_span(r, s)) space.insert(std::move(p));
      long dim = monos - long(space.dim());
      if (dim) out.add_term({2 * r, 4 * s}, mpq_class(dim));
    }
  return out;
}

YPolynomial shift_S(const YPolynomial &p) {
  YPolynomial r;
  for (const auto &[m, c] : p) {
    if (!m.empty() && m.back() == 1) continue;  // y_{-1} -> 0
    YMonomial shifted;
    shifted.reserve(m.size());
    for (int i : m) shifted.push_back(i - 1);
    ypoly_add_term(r, shifted, c);
  }
  return r;
}

CheckOutcome verify_relation_shift(int n_min) {
  const char *name = "relation-shift-identity";
  if (!(shift_S(relation(-2)).empty() && shift_S(relation(-3)).empty()))
    return CheckOutcome::fail(name, std::nullopt, "S should kill r_{-2} and r_{-3}");
  for (int n = -4; n >= n_min; --n)
    if (shift_S(relation(n)) != relation(n + 2))
      return CheckOutcome::fail(name, std::nullopt,
                                "S(r_" + std::to_string(n) + ") = " +
                                    ypoly_to_text(shift_S(relation(n))) + " != " +
                                    ypoly_to_text(relation(n + 2)));
  return CheckOutcome::ok(name);
}

std::vector<CheckOutcome> verify_S_stability(int max_charge, int max_weight) {
  CheckOutcome into = CheckOutcome::ok("ideal-shift-into-ideal");
  CheckOutcome pre = CheckOutcome::ok("ideal-shift-preimage");
  for (int r = 2; r <= max_charge; ++r)
    for (int s = r; s <= max_weight; ++s) {
      auto gens = ideal_component_generators(r, s);
      if (gens.empty()) continue;
      RowSpace<YMonomial, YMonomialLess> target;
      if (s - r >= 0)
        for (auto &p : ideal_component_span(r, s - r)) target.insert(std::move(p));
      for (const auto &g : gens) {
        YPolynomial img = shift_S(g.poly);
        if (into.pass && !img.empty() && !target.contains(img))
          into = CheckOutcome::fail(
              "ideal-shift-into-ideal", Bidegree{2 * r, 4 * s},
              "S(" + ypoly_to_text(g.poly) + ") = " + ypoly_to_text(img) +
                  " not in the ideal component at weight " + std::to_string(s - r));
        // the generator two weights up that S sends onto this one
        YMonomial up = g.cofactor;
        for (int &i : up) ++i;
        YPolynomial lift = monomial_times(up, relation(g.n - 2));
        if (pre.pass && shift_S(lift) != g.poly)
          pre = CheckOutcome::fail(
              "ideal-shift-preimage", Bidegree{2 * r, 4 * s},
              "S(" + ypoly_to_text(lift) + ") != " + ypoly_to_text(g.poly));
      }
    }
  return {into, pre};
}

CheckOutcome cross_check_hilbert(ComponentStore &store, int max_charge, int max_weight) {
  const char *name = "hilbert-matches-character";
  BivariateSeries h = hilbert_series(max_charge, 4 * max_weight);
  BivariateSeries c = character(store, Label::vacuum, max_charge, 4 * max_weight);
  if (h == c) return CheckOutcome::ok(name);
  BivariateSeries d = h - c;
  Bidegree at = d.terms().begin()->first;
  return CheckOutcome::fail(name, at,
                            "hilbert " + rat_str(h.coeff(at)) + " != character " +
                                rat_str(c.coeff(at)));
}

}  // namespace rrps
