#include "verify.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include <json.hpp>

#include "cache.hpp"
#include "fock.hpp"
#include "ideal.hpp"
#include "partitions.hpp"
#include "version.hpp"

namespace rrps {

const char *command_name(Command c) {
  switch (c) {
    case Command::character: return "character";
    case Command::exactness: return "exactness";
    case Command::recursion: return "recursion";
    case Command::hilbert: return "hilbert";
    case Command::identities: return "identities";
    case Command::all: return "all";
  }
  return "?";
}

std::optional<Command> command_from_name(const std::string &s) {
  for (Command c : {Command::character, Command::exactness, Command::recursion,
                    Command::hilbert, Command::identities, Command::all})
    if (s == command_name(c)) return c;
  return std::nullopt;
}

namespace {

using ordered_json = nlohmann::ordered_json;

// every basis state h(-p_1)...h(-p_m) e^{ka/2} with weight4 <= w4cap
std::vector<BasisState> sweep_states(int w4cap, bool even_k_only) {
  std::vector<BasisState> out;
  for (int k = -w4cap; k <= w4cap; ++k) {
    if (k * k > w4cap) continue;
    if (even_k_only && ((k % 2) + 2) % 2 != 0) continue;
    for (int w = 0; 4 * w + k * k <= w4cap; ++w)
      for (const auto &p : partitions_of(w)) out.push_back({p, k});
  }
  return out;
}

FockVector basis_vec(const BasisState &st) {
  FockVector v;
  add_term(v, st, 1);
  return v;
}

std::string state_text(const BasisState &st) { return fock_to_text(basis_vec(st)); }

// run fn(0..n-1) on up to `jobs` threads; rethrows the first failure
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)> &fn) {
  std::size_t workers = std::min<std::size_t>(std::size_t(std::max(jobs, 1)), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr first;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!first) first = std::current_exception();
        }
      }
    });
  for (auto &th : pool) th.join();
  if (first) std::rethrow_exception(first);
}

using ComponentKey = std::pair<Label, Bidegree>;

// same loop as character(): every component the window can see
void add_character_keys(std::set<ComponentKey> &keys, Label l, int max_charge, int cap4) {
  for (int r = 0; r <= max_charge; ++r) {
    int smin = (l == Label::vacuum) ? r : 2 * r;
    for (int s = smin;; ++s) {
      if (r == 0 && s > 0) break;
      Bidegree bd = component_bidegree(l, r, s);
      if (bd.weight4 > cap4) break;
      keys.insert({l, bd});
    }
  }
}

// everything verify_exactness, verify_shift_relation, and verify_euler touch
void add_exactness_keys(std::set<ComponentKey> &keys, int M, int W) {
  for (int s = 0; s <= W; ++s)
    for (int r = 0; r <= std::min(M, s); ++r) {
      keys.insert({Label::charged, Bidegree{2 * r - 1, 4 * s - 4 * r + 1}});
      keys.insert({Label::vacuum, Bidegree{2 * r, 4 * s}});
      keys.insert({Label::charged, Bidegree{2 * r + 1, 4 * s + 1}});
    }
  for (int r = 0; r <= M; ++r)
    for (int s = 0; s <= W; ++s) {
      keys.insert({Label::vacuum, component_bidegree(Label::vacuum, r, s)});
      keys.insert({Label::charged, component_bidegree(Label::charged, r, s + r)});
    }
  add_character_keys(keys, Label::vacuum, M, 4 * W);
  add_character_keys(keys, Label::charged, M, 4 * (W + M) + 1);
}

void warm(ComponentStore &store, const std::set<ComponentKey> &keys, int jobs) {
  std::vector<ComponentKey> v(keys.begin(), keys.end());
  parallel_for(v.size(), jobs, [&](std::size_t i) { store.get(v[i].first, v[i].second); });
}

// pass iff a == b; on failure report the first differing bidegree
CheckOutcome series_equal_check(std::string name, const BivariateSeries &a,
                                const BivariateSeries &b, const std::string &a_what,
                                const std::string &b_what) {
  if (a == b) return CheckOutcome::ok(std::move(name));
  BivariateSeries d = a - b;
  Bidegree bd = d.terms().begin()->first;
  return CheckOutcome::fail(std::move(name), bd,
                            a_what + " " + rat_str(a.coeff(bd)) + " != " + b_what + " " +
                                rat_str(b.coeff(bd)));
}

// every component dimension in the window equals the count of partitions with
// parts differing by at least two (minimal part 1 on vacuum, 2 on charged)
CheckOutcome check_dimension_oracle(ComponentStore &store, Label l, int M, int cap4) {
  std::string name = std::string(label_name(l)) + "-dimension-matches-gap-count";
  for (int r = 0; r <= M; ++r) {
    int smin = (l == Label::vacuum) ? r : 2 * r;
    for (int s = smin;; ++s) {
      if (r == 0 && s > 0) break;
      Bidegree bd = component_bidegree(l, r, s);
      if (bd.weight4 > cap4) break;
      int dim = store.get(l, bd)->dim;
      long expect = diff2_count(s, r, l == Label::vacuum ? 1 : 2);
      if (dim != expect)
        return CheckOutcome::fail(name, bd,
                                  "dim " + std::to_string(dim) + " != gap-partition count " +
                                      std::to_string(expect));
    }
  }
  return CheckOutcome::ok(name);
}

CheckOutcome check_character_sum_side(const BivariateSeries &chi, Label l, int M, int cap4) {
  std::string name = std::string(label_name(l)) + "-character-matches-sum-side";
  BivariateSeries expect = (l == Label::vacuum) ? rr_sum(0, cap4, M)
                                                : rr_sum(1, cap4, M).offset(1, 1);
  return series_equal_check(std::move(name), chi, expect, "character", "sum side");
}

CheckOutcome check_recursion_residual(int W) {
  const std::string name = "recursion-residual-zero";
  // charge bound past sqrt(W) so only the cap truncates the sum
  int mc = 1;
  while (mc * mc <= W) ++mc;
  BivariateSeries r = recursion_residual(rr_sum(0, 4 * W, mc));
  if (r.empty()) return CheckOutcome::ok(name);
  Bidegree bd = r.terms().begin()->first;
  return CheckOutcome::fail(name, bd, "residual coefficient " + rat_str(r.coeff(bd)));
}

std::vector<CheckOutcome> check_product_identities(int W) {
  int cap4 = 4 * W;
  int mc = 1;
  while (mc * mc <= W) ++mc;
  std::vector<CheckOutcome> out;
  out.push_back(series_equal_check("product-identity-residues-1-4",
                                   rr_sum(0, cap4, mc).specialize_x1(),
                                   rr_product({1, 4}, cap4), "sum side", "product side"));
  out.push_back(series_equal_check("product-identity-residues-2-3",
                                   rr_sum(1, cap4, mc + 1).specialize_x1(),
                                   rr_product({2, 3}, cap4), "sum side", "product side"));
  return out;
}

void append(std::vector<CheckOutcome> &into, std::vector<CheckOutcome> more) {
  for (auto &c : more) into.push_back(std::move(c));
}

}  // namespace

CheckOutcome check_square_zero(int w4cap) {
  const std::string name = "square-sum-vanishes";
  for (const auto &st : sweep_states(w4cap, true)) {
    FockVector v = basis_vec(st);
    Bidegree bd = st.bidegree();
    // x_a(j) annihilates past j = (w4 - (c2+2)^2)/4, so large n vanish termwise;
    // each step further below n = 0 roughly doubles the cost, so the window
    // stops at -6 after the cancellations have been exercised from both sides
    int jmax = floor_div(bd.weight4 - (bd.charge2 + 2) * (bd.charge2 + 2), 4);
    int n_hi = std::max(2, 2 * jmax + 4);
    for (int n = -6; n <= n_hi; ++n) {
      FockVector r = square_sum(n, v);
      if (!r.empty())
        return CheckOutcome::fail(name, bd,
                                  "sum_{i+j=" + std::to_string(n) + "} x_a(i) x_a(j) on " +
                                      state_text(st) + " = " + fock_to_text(r));
    }
  }
  return CheckOutcome::ok(name);
}

CheckOutcome check_mode_translation(int w4cap, int m_lo, int m_hi) {
  const std::string name = "mode-translation-relation";
  for (int t : {1, 2})
    for (const auto &st : sweep_states(w4cap, false)) {
      FockVector v = basis_vec(st);
      for (int m = m_lo; m <= m_hi; ++m)
        if (x_alpha(m, lattice_shift(t, v)) != lattice_shift(t, x_alpha(m + t, v)))
          return CheckOutcome::fail(name, st.bidegree(),
                                    "x_a(" + std::to_string(m) + ") e^{" + std::to_string(t) +
                                        "a/2} and e^{" + std::to_string(t) + "a/2} x_a(" +
                                        std::to_string(m + t) + ") differ on " +
                                        state_text(st));
    }
  return CheckOutcome::ok(name);
}

CheckOutcome check_o_commutes(int w4cap, int m_lo, int m_hi) {
  const std::string name = "o-commutes-with-modes";
  for (const auto &st : sweep_states(w4cap, true)) {
    FockVector v = basis_vec(st);
    for (int m = m_lo; m <= m_hi; ++m)
      if (o_operator(x_alpha(m, v)) != x_alpha(m, o_operator(v)))
        return CheckOutcome::fail(name, st.bidegree(),
                                  "o x_a(" + std::to_string(m) + ") != x_a(" +
                                      std::to_string(m) + ") o on " + state_text(st));
  }
  return CheckOutcome::ok(name);
}

Report run(const RunConfig &cfg) {
  if (cfg.max_charge < 0 || cfg.max_weight < 0)
    throw std::invalid_argument("run: max-charge and max-weight must be >= 0");
  if (cfg.jobs < 1) throw std::invalid_argument("run: jobs must be >= 1");
  if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "text")
    throw std::invalid_argument("run: unknown format \"" + cfg.format + "\"");

  auto t0 = std::chrono::steady_clock::now();

  Report rep;
  rep.command = command_name(cfg.command);
  rep.module = cfg.module;
  rep.max_charge = cfg.max_charge;
  rep.max_weight = cfg.max_weight;
  rep.cache_dir = cfg.cache_dir;
  rep.version = kVersion;

  std::optional<std::filesystem::path> dir;
  if (cfg.cache_dir) dir = *cfg.cache_dir;
  ComponentStore store(dir);

  const int M = cfg.max_charge, W = cfg.max_weight;
  const int cap4 = 4 * W;

  std::set<ComponentKey> keys;
  switch (cfg.command) {
    case Command::character:
      add_character_keys(keys, cfg.module, M, cap4);
      break;
    case Command::exactness:
      add_exactness_keys(keys, M, W);
      break;
    case Command::hilbert:
      add_character_keys(keys, Label::vacuum, M, cap4);
      break;
    case Command::all:
      add_character_keys(keys, Label::vacuum, M, cap4);
      add_character_keys(keys, Label::charged, M, cap4);
      add_exactness_keys(keys, M, W);
      break;
    case Command::recursion:
    case Command::identities:
      break;
  }
  warm(store, keys, cfg.jobs);

  auto character_block = [&](Label l) {
    BivariateSeries chi = character(store, l, M, cap4);
    rep.checks.push_back(check_dimension_oracle(store, l, M, cap4));
    rep.checks.push_back(check_character_sum_side(chi, l, M, cap4));
    return chi;
  };
  auto exactness_block = [&] {
    rep.checks.push_back(check_square_zero(24));
    rep.checks.push_back(check_mode_translation(24, -6, 6));
    rep.checks.push_back(check_o_commutes(24, -5, 2));
    append(rep.checks, verify_exactness(store, M, W));
    rep.checks.push_back(verify_shift_relation(store, M, W));
    append(rep.checks, verify_euler(store, M, W));
  };
  auto hilbert_block = [&] {
    rep.checks.push_back(cross_check_hilbert(store, M, W));
    rep.checks.push_back(verify_relation_shift(-12));
    append(rep.checks, verify_S_stability(M, W));
    return hilbert_series(M, cap4);
  };

  switch (cfg.command) {
    case Command::character:
      rep.series = character_block(cfg.module);
      break;
    case Command::exactness:
      exactness_block();
      break;
    case Command::recursion:
      rep.checks.push_back(check_recursion_residual(W));
      break;
    case Command::hilbert:
      rep.series = hilbert_block();
      break;
    case Command::identities:
      append(rep.checks, check_product_identities(W));
      break;
    case Command::all:
      character_block(Label::vacuum);
      character_block(Label::charged);
      exactness_block();
      rep.checks.push_back(check_recursion_residual(W));
      append(rep.checks, check_product_identities(W));
      hilbert_block();
      break;
  }

  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

std::string Report::to_json() const {
  ordered_json j;
  j["command"] = command;
  ordered_json cj;
  cj["module"] = label_name(module);
  cj["max_charge"] = max_charge;
  cj["max_weight"] = max_weight;
  if (cache_dir) cj["cache_dir"] = *cache_dir;
  else cj["cache_dir"] = nullptr;
  j["config"] = cj;
  ordered_json arr = ordered_json::array();
  for (const auto &c : checks) {
    ordered_json e;
    e["name"] = c.name;
    e["status"] = c.pass ? "pass" : "fail";
    if (c.pass) {
      e["counterexample"] = nullptr;
    } else {
      ordered_json ce;
      if (c.where) {
        ce["charge2"] = c.where->charge2;
        ce["weight4"] = c.where->weight4;
      }
      ce["detail"] = c.detail;
      e["counterexample"] = ce;
    }
    arr.push_back(e);
  }
  j["checks"] = arr;
  if (series) j["series"] = ordered_json::parse(series->to_json());
  else j["series"] = nullptr;
  j["elapsed_ms"] = elapsed_ms;
  j["version"] = version;
  return j.dump(2) + "\n";
}

namespace {

std::string csv_quote(const std::string &s) {
  std::string out = "\"";
  for (char ch : s) {
    out += ch;
    if (ch == '"') out += '"';
  }
  out += '"';
  return out;
}

}  // namespace

std::string Report::to_csv() const {
  std::ostringstream os;
  if (series) {
    // dimension table; the checks are reflected in the process exit status
    std::string lab = command == "hilbert" ? "hilbert" : label_name(module);
    os << "label,charge2,weight4,dim\n";
    for (const auto &[bd, c] : series->terms())
      os << lab << ',' << bd.charge2 << ',' << bd.weight4 << ',' << rat_str(c) << '\n';
  } else {
    os << "check,status,counterexample\n";
    for (const auto &c : checks) {
      os << c.name << ',' << (c.pass ? "pass" : "fail") << ',';
      if (!c.pass) {
        std::string where = c.where ? "at " + to_string(*c.where) + ": " : "";
        os << csv_quote(where + c.detail);
      }
      os << '\n';
    }
  }
  return os.str();
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "command: " << command << '\n';
  os << "window: module " << label_name(module) << ", max charge " << max_charge
     << ", max weight " << max_weight << '\n';
  os << "cache: " << (cache_dir ? *cache_dir : std::string("none")) << '\n';
  if (!checks.empty()) {
    os << "checks:\n";
    for (const auto &c : checks) {
      os << "  " << (c.pass ? "PASS" : "FAIL") << ' ' << c.name;
      if (!c.pass) {
        if (c.where) os << " at " << to_string(*c.where);
        if (!c.detail.empty()) os << ": " << c.detail;
      }
      os << '\n';
    }
  }
  if (series) os << "series: " << series->to_text() << '\n';
  os << "elapsed: " << elapsed_ms << " ms\n";
  os << "version: " << version << '\n';
  os << "result: " << (passed() ? "VERIFIED" : "FAILED") << '\n';
  return os.str();
}

std::string Report::render(const std::string &format) const {
  if (format == "json") return to_json();
  if (format == "csv") return to_csv();
  if (format == "text") return to_text();
  throw std::invalid_argument("render: unknown format \"" + format + "\"");
}

}  // namespace rrps
