#include "rrps.h"

#include <json.hpp>

#include <cstring>
#include <filesystem>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>

#include "cache.hpp"
#include "ideal.hpp"
#include "principal.hpp"
#include "series.hpp"
#include "verify.hpp"
#include "version.hpp"

struct rrps_ctx {
  std::string last_error;
  std::optional<std::string> cache_dir;
  int jobs = 1;
};

struct rrps_series {
  rrps::BivariateSeries s;
};

struct rrps_report {
  rrps::Report r;
};

namespace {

rrps_status fail(rrps_ctx *ctx, rrps_status st, const std::string &msg) {
  ctx->last_error = msg;
  return st;
}

char *dup_string(const std::string &s) {
  char *p = new char[s.size() + 1];
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// run f() with the library's exception-to-status mapping
template <class F>
rrps_status guarded(rrps_ctx *ctx, F &&f) {
  if (!ctx) return RRPS_ERR_USAGE;
  ctx->last_error.clear();
  try {
    return f();
  } catch (const std::invalid_argument &e) {
    return fail(ctx, RRPS_ERR_USAGE, e.what());
  } catch (const nlohmann::json::exception &e) {
    return fail(ctx, RRPS_ERR_USAGE, e.what());
  } catch (const std::domain_error &e) {
    return fail(ctx, RRPS_ERR_DOMAIN, e.what());
  } catch (const std::filesystem::filesystem_error &e) {
    return fail(ctx, RRPS_ERR_IO, e.what());
  } catch (const std::ios_base::failure &e) {
    return fail(ctx, RRPS_ERR_IO, e.what());
  } catch (const std::exception &e) {
    return fail(ctx, RRPS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ctx, RRPS_ERR_INTERNAL, "unknown error");
  }
}

rrps::Label parse_label(const char *module_label) {
  if (!module_label) throw std::invalid_argument("module label is null");
  auto l = rrps::label_from_name(module_label);
  if (!l)
    throw std::invalid_argument(std::string("unknown module label \"") + module_label +
                                "\" (expected \"vacuum\" or \"charged\")");
  return *l;
}

void check_window(int max_charge, int max_weight) {
  if (max_charge < 0 || max_weight < 0)
    throw std::invalid_argument("max_charge and max_weight must be >= 0");
}

template <class T, class Make>
rrps_status emit(rrps_ctx *ctx, T **out, Make &&make) {
  return guarded(ctx, [&]() -> rrps_status {
    if (!out) throw std::invalid_argument("output pointer is null");
    *out = new T{make()};
    return RRPS_OK;
  });
}

}  // namespace

extern "C" {

const char *rrps_version(void) { return rrps::kVersion; }

rrps_ctx *rrps_ctx_new(void) { return new (std::nothrow) rrps_ctx; }

void rrps_ctx_free(rrps_ctx *ctx) { delete ctx; }

const char *rrps_ctx_last_error(const rrps_ctx *ctx) {
  return ctx ? ctx->last_error.c_str() : "context is null";
}

rrps_status rrps_ctx_set_cache_dir(rrps_ctx *ctx, const char *dir) {
  return guarded(ctx, [&]() -> rrps_status {
    if (dir && *dir) ctx->cache_dir = std::string(dir);
    else ctx->cache_dir.reset();
    return RRPS_OK;
  });
}

rrps_status rrps_ctx_set_jobs(rrps_ctx *ctx, int jobs) {
  return guarded(ctx, [&]() -> rrps_status {
    if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    ctx->jobs = jobs;
    return RRPS_OK;
  });
}

rrps_status rrps_character(rrps_ctx *ctx, const char *module_label, int max_charge,
                           int max_weight, rrps_series **out) {
  return emit(ctx, out, [&] {
    rrps::Label l = parse_label(module_label);
    check_window(max_charge, max_weight);
    std::optional<std::filesystem::path> dir;
    if (ctx->cache_dir) dir = *ctx->cache_dir;
    rrps::ComponentStore store(dir);
    return rrps_series{rrps::character(store, l, max_charge, 4 * max_weight)};
  });
}

rrps_status rrps_sum_side(rrps_ctx *ctx, const char *module_label, int max_charge,
                          int max_weight, rrps_series **out) {
  return emit(ctx, out, [&] {
    rrps::Label l = parse_label(module_label);
    check_window(max_charge, max_weight);
    rrps::BivariateSeries s = l == rrps::Label::vacuum
                                  ? rrps::rr_sum(0, 4 * max_weight, max_charge)
                                  : rrps::rr_sum(1, 4 * max_weight, max_charge).offset(1, 1);
    return rrps_series{std::move(s)};
  });
}

rrps_status rrps_product_side(rrps_ctx *ctx, const char *module_label, int max_weight,
                              rrps_series **out) {
  return emit(ctx, out, [&] {
    rrps::Label l = parse_label(module_label);
    check_window(0, max_weight);
    std::set<int> residues = l == rrps::Label::vacuum ? std::set<int>{1, 4}
                                                      : std::set<int>{2, 3};
    return rrps_series{rrps::rr_product(residues, 4 * max_weight)};
  });
}

rrps_status rrps_hilbert_series(rrps_ctx *ctx, int max_charge, int max_weight,
                                rrps_series **out) {
  return emit(ctx, out, [&] {
    check_window(max_charge, max_weight);
    return rrps_series{rrps::hilbert_series(max_charge, 4 * max_weight)};
  });
}

rrps_status rrps_series_to_json(rrps_ctx *ctx, const rrps_series *s, char **out) {
  return guarded(ctx, [&]() -> rrps_status {
    if (!s || !out) throw std::invalid_argument("null argument");
    *out = dup_string(s->s.to_json());
    return RRPS_OK;
  });
}

rrps_status rrps_series_from_json(rrps_ctx *ctx, const char *json, rrps_series **out) {
  return emit(ctx, out, [&] {
    if (!json) throw std::invalid_argument("json text is null");
    return rrps_series{rrps::BivariateSeries::from_json(json)};
  });
}

rrps_status rrps_series_coeff(rrps_ctx *ctx, const rrps_series *s, int charge2,
                              int weight4, char **out) {
  return guarded(ctx, [&]() -> rrps_status {
    if (!s || !out) throw std::invalid_argument("null argument");
    *out = dup_string(rrps::rat_str(s->s.coeff({charge2, weight4})));
    return RRPS_OK;
  });
}

size_t rrps_series_term_count(const rrps_series *s) { return s ? s->s.term_count() : 0; }

int rrps_series_equal(const rrps_series *a, const rrps_series *b) {
  if (!a || !b) return a == b;
  return a->s == b->s ? 1 : 0;
}

void rrps_series_free(rrps_series *s) { delete s; }

rrps_status rrps_run(rrps_ctx *ctx, const char *command, const char *module_label,
                     int max_charge, int max_weight, rrps_report **out) {
  return emit(ctx, out, [&] {
    if (!command) throw std::invalid_argument("command is null");
    auto c = rrps::command_from_name(command);
    if (!c)
      throw std::invalid_argument(std::string("unknown command \"") + command + "\"");
    rrps::RunConfig cfg;
    cfg.command = *c;
    cfg.module = parse_label(module_label);
    cfg.max_charge = max_charge;
    cfg.max_weight = max_weight;
    cfg.cache_dir = ctx->cache_dir;
    cfg.jobs = ctx->jobs;
    return rrps_report{rrps::run(cfg)};
  });
}

int rrps_report_passed(const rrps_report *r) { return r && r->r.passed() ? 1 : 0; }

size_t rrps_report_check_count(const rrps_report *r) {
  return r ? r->r.checks.size() : 0;
}

rrps_status rrps_report_render(rrps_ctx *ctx, const rrps_report *r, const char *format,
                               char **out) {
  return guarded(ctx, [&]() -> rrps_status {
    if (!r || !format || !out) throw std::invalid_argument("null argument");
    *out = dup_string(r->r.render(format));
    return RRPS_OK;
  });
}

void rrps_report_free(rrps_report *r) { delete r; }

void rrps_string_free(char *s) { delete[] s; }

}  // extern "C"
