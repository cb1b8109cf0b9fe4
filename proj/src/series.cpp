#include "series.hpp"

#include <json.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace rrps {

using ordered_json = nlohmann::ordered_json;

BivariateSeries BivariateSeries::monomial(int cap4, Bidegree d, const mpq_class &c) {
  BivariateSeries s(cap4);
  s.add_term(d, c);
  return s;
}

mpq_class BivariateSeries::coeff(Bidegree d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void BivariateSeries::add_term(Bidegree d, const mpq_class &c) {
  if (c == 0 || d.weight4 > cap4_) return;
  auto [it, inserted] = terms_.emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

static void require_same_cap(const BivariateSeries &a, const BivariateSeries &b) {
  if (a.cap4() != b.cap4())
    throw std::invalid_argument("series cap mismatch: " + std::to_string(a.cap4()) +
                                " vs " + std::to_string(b.cap4()));
}

BivariateSeries BivariateSeries::operator-() const {
  BivariateSeries r(cap4_);
  for (const auto &[d, c] : terms_) r.terms_.emplace(d, -c);
  return r;
}

BivariateSeries &BivariateSeries::operator+=(const BivariateSeries &o) {
  require_same_cap(*this, o);
  for (const auto &[d, c] : o.terms_) add_term(d, c);
  return *this;
}

BivariateSeries &BivariateSeries::operator-=(const BivariateSeries &o) {
  require_same_cap(*this, o);
  for (const auto &[d, c] : o.terms_) add_term(d, -c);
  return *this;
}

BivariateSeries operator*(const BivariateSeries &a, const BivariateSeries &b) {
  require_same_cap(a, b);
  BivariateSeries r(a.cap4_);
  for (const auto &[da, ca] : a.terms_)
    for (const auto &[db, cb] : b.terms_) {
      if (da.weight4 + db.weight4 > r.cap4_) break;  // b sorted by weight4
      r.add_term({da.charge2 + db.charge2, da.weight4 + db.weight4}, ca * cb);
    }
  return r;
}

BivariateSeries BivariateSeries::substitute_x_by_xqk(int k) const {
  if (k < 0) throw std::invalid_argument("substitute_x_by_xqk: k must be >= 0");
  BivariateSeries r(cap4_);
  // x^r q^s -> x^r q^{s + k r}; in integer units weight4 += 2 k charge2
  for (const auto &[d, c] : terms_) r.add_term({d.charge2, d.weight4 + 2 * k * d.charge2}, c);
  return r;
}

BivariateSeries BivariateSeries::offset(int dcharge2, int dweight4) const {
  BivariateSeries r(cap4_);
  for (const auto &[d, c] : terms_) r.add_term({d.charge2 + dcharge2, d.weight4 + dweight4}, c);
  return r;
}

BivariateSeries BivariateSeries::specialize_x1() const {
  BivariateSeries r(cap4_);
  for (const auto &[d, c] : terms_) r.add_term({0, d.weight4}, c);
  return r;
}

BivariateSeries BivariateSeries::with_cap(int new_cap4) const {
  BivariateSeries r(new_cap4);
  for (const auto &[d, c] : terms_) r.add_term(d, c);
  return r;
}

std::string BivariateSeries::to_json() const {
  ordered_json j;
  j["cap4"] = cap4_;
  ordered_json arr = ordered_json::array();
  for (const auto &[d, c] : terms_)
    arr.push_back(ordered_json::array({d.charge2, d.weight4, rat_str(c)}));
  j["terms"] = std::move(arr);
  return j.dump();
}

BivariateSeries BivariateSeries::from_json(const std::string &text) {
  ordered_json j = ordered_json::parse(text);
  if (!j.is_object() || !j.contains("cap4") || !j.contains("terms") ||
      !j["cap4"].is_number_integer() || !j["terms"].is_array())
    throw std::invalid_argument("series json: expected {\"cap4\": int, \"terms\": [...]}");
  BivariateSeries s(j["cap4"].get<int>());
  for (const auto &t : j["terms"]) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
        !t[1].is_number_integer() || !t[2].is_string())
      throw std::invalid_argument("series json: bad term");
    s.add_term({t[0].get<int>(), t[1].get<int>()}, rat_parse(t[2].get<std::string>()));
  }
  return s;
}

static std::string exponent_str(int num, int den) {
  // reduce num/den with den in {2, 4}
  while (den > 1 && num % 2 == 0) {
    num /= 2;
    den /= 2;
  }
  if (den == 1) return std::to_string(num);
  return "(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

std::string BivariateSeries::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto &[d, c] : terms_) {
    mpq_class a = abs(c);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    std::string factors;
    if (d.charge2 != 0) {
      factors += "x";
      if (d.charge2 != 2) factors += "^" + exponent_str(d.charge2, 2);
    }
    if (d.weight4 != 0) {
      if (!factors.empty()) factors += "*";
      factors += "q";
      if (d.weight4 != 4) factors += "^" + exponent_str(d.weight4, 4);
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

BivariateSeries euler_factor_inverse(int n, int cap4) {
  if (n < 0) throw std::invalid_argument("euler_factor_inverse: n must be >= 0");
  int smax = cap4 >= 0 ? cap4 / 4 : -1;
  std::vector<mpz_class> c(smax + 1 > 0 ? smax + 1 : 0, 0);
  if (smax >= 0) c[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int s = i; s <= smax; ++s) c[s] += c[s - i];  // 1/(1-q^i) as a geometric factor
  BivariateSeries r(cap4);
  for (int s = 0; s <= smax; ++s) r.add_term({0, 4 * s}, mpq_class(c[s]));
  return r;
}

BivariateSeries rr_sum(int a, int cap4, int max_charge) {
  if (a != 0 && a != 1) throw std::invalid_argument("rr_sum: a must be 0 or 1");
  BivariateSeries r(cap4);
  for (int n = 0; n <= max_charge && 4 * (n * n + a * n) <= cap4; ++n) {
    // x^n q^{n^2 + a n} / (q)_n
    r += euler_factor_inverse(n, cap4).offset(2 * n, 4 * (n * n + a * n));
  }
  return r;
}

BivariateSeries rr_product(const std::set<int> &residues, int cap4) {
  if (residues != std::set<int>{1, 4} && residues != std::set<int>{2, 3})
    throw std::invalid_argument("rr_product: residues must be {1,4} or {2,3}");
  int smax = cap4 >= 0 ? cap4 / 4 : -1;
  std::vector<mpz_class> c(smax + 1 > 0 ? smax + 1 : 0, 0);
  if (smax >= 0) c[0] = 1;
  for (int p = 1; p <= smax; ++p) {
    if (!residues.count(p % 5)) continue;
    for (int s = p; s <= smax; ++s) c[s] += c[s - p];
  }
  BivariateSeries r(cap4);
  for (int s = 0; s <= smax; ++s) r.add_term({0, 4 * s}, mpq_class(c[s]));
  return r;
}

BivariateSeries recursion_residual(const BivariateSeries &f) {
  // F(x,q) - F(xq,q) - x q F(xq^2,q)
  return f - f.substitute_x_by_xqk(1) - f.substitute_x_by_xqk(2).offset(2, 4);
}

}  // namespace rrps
