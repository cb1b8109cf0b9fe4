#include "fock.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "partitions.hpp"

namespace rrps {

using ordered_json = nlohmann::ordered_json;

void add_term(FockVector &v, const BasisState &s, const mpq_class &c) {
  if (c == 0) return;
  auto [it, inserted] = v.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

FockVector scale(const FockVector &v, const mpq_class &c) {
  FockVector r;
  if (c == 0) return r;
  for (const auto &[s, a] : v) r.emplace(s, a * c);
  return r;
}

FockVector add(FockVector a, const FockVector &b) {
  for (const auto &[s, c] : b) add_term(a, s, c);
  return a;
}

std::optional<Bidegree> bidegree_of(const FockVector &v) {
  std::optional<Bidegree> d;
  for (const auto &[s, c] : v) {
    Bidegree sd = s.bidegree();
    if (!d)
      d = sd;
    else if (*d != sd)
      return std::nullopt;
  }
  return v.empty() ? std::nullopt : d;
}

FockVector unit_state(int k) { return {{BasisState{{}, k}, mpq_class(1)}}; }

FockVector heis_act(int n, const FockVector &v) {
  FockVector r;
  for (const auto &[s, c] : v) {
    if (n < 0) {
      BasisState t = s;
      t.parts.insert(std::upper_bound(t.parts.begin(), t.parts.end(), -n,
                                      std::greater<int>()),
                     -n);
      add_term(r, t, c);
    } else if (n > 0) {
      auto lo = std::lower_bound(s.parts.begin(), s.parts.end(), n, std::greater<int>());
      auto hi = std::upper_bound(s.parts.begin(), s.parts.end(), n, std::greater<int>());
      long mult = hi - lo;
      if (mult == 0) continue;
      BasisState t = s;
      t.parts.erase(t.parts.begin() + (lo - s.parts.begin()));
      add_term(r, t, c * mpq_class(2L * n * mult));  // [h(n), h(-n)] = 2n, mult choices
    } else {
      add_term(r, s, c * s.k);  // h(0) e^{k a/2} = <a, k a/2> = k
    }
  }
  return r;
}

FockVector lattice_shift(int halfsteps, const FockVector &v) {
  FockVector r;
  for (const auto &[s, c] : v) {
    BasisState t = s;
    t.k += halfsteps;
    r.emplace(t, c);
  }
  return r;
}

namespace {

// merge two descending part lists
std::vector<int> merge_desc(const std::vector<int> &a, const std::vector<int> &b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
             std::greater<int>());
  return out;
}

// distinct part values of a descending list with multiplicities
std::vector<std::pair<int, int>> run_lengths(const std::vector<int> &parts) {
  std::vector<std::pair<int, int>> out;
  for (int p : parts) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

mpz_class binom(long n, long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// coefficient of the E^- contribution creating the partition pi:
// prod over values m with multiplicity b: (lam_half / (2m))^b / b!
mpq_class creation_coeff(const std::vector<int> &pi, int lam_half) {
  mpq_class c(1);
  for (const auto &[m, b] : run_lengths(pi)) {
    mpq_class f = rat(lam_half, 2L * m);
    for (int i = 0; i < b; ++i) c *= f;
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), b);
    c /= mpq_class(fact);
  }
  return c;
}

}  // namespace

FockVector vertex_component(int lam_half, int power2, const FockVector &v) {
  FockVector out;
  for (const auto &[st, coeff] : v) {
    const int p0_2 = lam_half * st.k;  // from x^l: <l, k a/2> = lam_half k / 2
    auto runs = run_lengths(st.parts);

    // choose how many copies of each part value E^+ kills; per value the
    // exponential collapses to (-lam_half)^a * binom(mult, a)
    std::vector<int> taken(runs.size(), 0);
    std::function<void(std::size_t, int, const mpz_class &)> choose =
        [&](std::size_t i, int adeg, const mpz_class &acoeff) {
          if (i == runs.size()) {
            int need2 = power2 - p0_2 + 2 * adeg;
            if (need2 < 0 || need2 % 2 != 0) return;
            int d = need2 / 2;
            std::vector<int> remaining;
            for (std::size_t j = 0; j < runs.size(); ++j)
              for (int c = 0; c < runs[j].second - taken[j]; ++c)
                remaining.push_back(runs[j].first);
            for (const auto &pi : partitions_of(d)) {
              mpq_class total = coeff * mpq_class(acoeff) * creation_coeff(pi, lam_half);
              add_term(out, BasisState{merge_desc(remaining, pi), st.k + lam_half}, total);
            }
            return;
          }
          const auto [val, mult] = runs[i];
          for (int a = 0; a <= mult; ++a) {
            mpz_class pw, base(-lam_half);
            mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), a);
            taken[i] = a;
            choose(i + 1, adeg + val * a, acoeff * binom(mult, a) * pw);
          }
          taken[i] = 0;
        };
    choose(0, 0, mpz_class(1));
  }
  return out;
}

FockVector x_alpha(int m, const FockVector &v) {
  return vertex_component(2, -2 * m - 2, v);
}

FockVector square_sum(int n, const FockVector &v) {
  if (v.empty()) return {};
  // largest mode with x_a(j) st != 0: -j-1 >= k - #parts, i.e.
  // j <= (weight4 - (k+2)^2)/4
  int jmax = 0;
  bool first = true;
  for (const auto &[s, c] : v) {
    Bidegree d = s.bidegree();
    int j = floor_div(d.weight4 - (d.charge2 + 2) * (d.charge2 + 2), 4);
    if (first || j > jmax) jmax = j;
    first = false;
  }
  FockVector acc;
  for (int j = n - jmax; j <= jmax; ++j)
    acc = add(std::move(acc), x_alpha(n - j, x_alpha(j, v)));
  return acc;
}

FockVector phase_on_vq(const FockVector &v) {
  FockVector r;
  for (const auto &[s, c] : v) {
    if (s.k % 2 != 0)
      throw std::domain_error("phase_on_vq: vector not supported on the even lattice");
    r.emplace(s, (s.k / 2) % 2 == 0 ? c : -c);
  }
  return r;
}

FockVector o_operator(const FockVector &v) {
  for (const auto &[s, c] : v)
    if (s.k % 2 != 0)
      throw std::domain_error("o_operator: vector not supported on the even lattice");
  return vertex_component(1, 0, phase_on_vq(v));
}

FockVector e_half(const FockVector &v) { return lattice_shift(1, v); }

std::string fock_to_json(const FockVector &v) {
  ordered_json arr = ordered_json::array();
  for (const auto &[s, c] : v) {
    ordered_json t;
    t["parts"] = s.parts;
    t["k"] = s.k;
    t["coeff"] = rat_str(c);
    arr.push_back(std::move(t));
  }
  ordered_json j;
  j["terms"] = std::move(arr);
  return j.dump();
}

FockVector fock_from_json(const std::string &text) {
  ordered_json j = ordered_json::parse(text);
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw std::invalid_argument("fock json: expected {\"terms\": [...]}");
  FockVector v;
  for (const auto &t : j["terms"]) {
    if (!t.is_object() || !t.contains("parts") || !t.contains("k") || !t.contains("coeff") ||
        !t["parts"].is_array() || !t["k"].is_number_integer() || !t["coeff"].is_string())
      throw std::invalid_argument("fock json: bad term");
    BasisState s;
    s.k = t["k"].get<int>();
    for (const auto &p : t["parts"]) {
      if (!p.is_number_integer()) throw std::invalid_argument("fock json: bad part");
      s.parts.push_back(p.get<int>());
    }
    std::vector<int> sorted = s.parts;
    std::sort(sorted.rbegin(), sorted.rend());
    if (sorted != s.parts || (!s.parts.empty() && s.parts.back() < 1))
      throw std::invalid_argument("fock json: parts must be descending positives");
    add_term(v, s, rat_parse(t["coeff"].get<std::string>()));
  }
  return v;
}

std::string fock_to_text(const FockVector &v) {
  if (v.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto &[s, c] : v) {
    mpq_class a = abs(c);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    std::string factors;
    for (const auto &[val, mult] : run_lengths(s.parts)) {
      factors += "h(-" + std::to_string(val) + ")";
      if (mult > 1) factors += "^" + std::to_string(mult);
      factors += " ";
    }
    factors += "e(" + std::to_string(s.k) + "/2)";
    if (a == 1)
      out += factors;
    else
      out += rat_str(a) + " " + factors;
  }
  return out;
}

}  // namespace rrps
