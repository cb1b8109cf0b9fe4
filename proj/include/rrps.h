/* rrps: exact principal-subspace characters for the level-1 A1 lattice model.
 *
 * C surface over the computational core.  Every entry point that can fail
 * takes an rrps_ctx and returns an rrps_status; on failure the context holds
 * a human-readable message (rrps_ctx_last_error) and output parameters are
 * left untouched.  Strings and objects returned through out-parameters are
 * owned by the caller and released with the matching *_free function.
 * Contexts are not thread-safe; use one per thread.
 */
#ifndef RRPS_H
#define RRPS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef RRPS_API
#define RRPS_API __attribute__((visibility("default")))
#endif

typedef enum rrps_status {
  RRPS_OK = 0,
  RRPS_ERR_USAGE = 1,    /* bad argument: unknown name, null pointer, bad input text */
  RRPS_ERR_DOMAIN = 2,   /* operation applied outside its mathematical domain */
  RRPS_ERR_IO = 3,       /* filesystem trouble (cache or output) */
  RRPS_ERR_INTERNAL = 4  /* anything else; see rrps_ctx_last_error */
} rrps_status;

typedef struct rrps_ctx rrps_ctx;       /* error channel + run options */
typedef struct rrps_series rrps_series; /* truncated series in x and q */
typedef struct rrps_report rrps_report; /* outcome of a verification run */

/* library version, e.g. "0.1.0"; also the component cache key */
RRPS_API const char *rrps_version(void);

RRPS_API rrps_ctx *rrps_ctx_new(void);
RRPS_API void rrps_ctx_free(rrps_ctx *ctx);
/* message from the most recent failing call on this context ("" after success) */
RRPS_API const char *rrps_ctx_last_error(const rrps_ctx *ctx);
/* directory for the on-disk component cache; NULL or "" disables caching */
RRPS_API rrps_status rrps_ctx_set_cache_dir(rrps_ctx *ctx, const char *dir);
/* worker threads for rrps_run component computation (default 1) */
RRPS_API rrps_status rrps_ctx_set_jobs(rrps_ctx *ctx, int jobs);

/* Graded character of the module's principal subspace: the coefficient of
 * x^{charge2/2} q^{weight4/4} is the dimension of that bigraded component.
 * module_label is "vacuum" or "charged"; weights run up to max_weight in
 * natural q-units and each monomial uses at most max_charge modes. */
RRPS_API rrps_status rrps_character(rrps_ctx *ctx, const char *module_label,
                                    int max_charge, int max_weight,
                                    rrps_series **out);

/* The q-series sum side predicted for the same character, in the same
 * normalization (the charged series carries the x^{1/2} q^{1/4} prefactor). */
RRPS_API rrps_status rrps_sum_side(rrps_ctx *ctx, const char *module_label,
                                   int max_charge, int max_weight,
                                   rrps_series **out);

/* Product side of the module's partition identity at x = 1: for "vacuum" the
 * product over exponents congruent to 1 or 4 mod 5, for "charged" over 2 or 3. */
RRPS_API rrps_status rrps_product_side(rrps_ctx *ctx, const char *module_label,
                                       int max_weight, rrps_series **out);

/* Graded dimensions of the polynomial model C[y]/I on the vacuum grid. */
RRPS_API rrps_status rrps_hilbert_series(rrps_ctx *ctx, int max_charge,
                                         int max_weight, rrps_series **out);

/* {"cap4": n, "terms": [[charge2, weight4, "num/den"], ...]}; bit-exact */
RRPS_API rrps_status rrps_series_to_json(rrps_ctx *ctx, const rrps_series *s,
                                         char **out);
RRPS_API rrps_status rrps_series_from_json(rrps_ctx *ctx, const char *json,
                                           rrps_series **out);
/* exact rational coefficient as a "num" or "num/den" string */
RRPS_API rrps_status rrps_series_coeff(rrps_ctx *ctx, const rrps_series *s,
                                       int charge2, int weight4, char **out);
RRPS_API size_t rrps_series_term_count(const rrps_series *s);
/* 1 when equal (same truncation cap and identical terms), else 0 */
RRPS_API int rrps_series_equal(const rrps_series *a, const rrps_series *b);
RRPS_API void rrps_series_free(rrps_series *s);

/* Execute a verification command: one of "character", "exactness",
 * "recursion", "hilbert", "identities", "all".  module_label selects the
 * module for "character" and is ignored elsewhere (pass "vacuum"). */
RRPS_API rrps_status rrps_run(rrps_ctx *ctx, const char *command,
                              const char *module_label, int max_charge,
                              int max_weight, rrps_report **out);
/* 1 when every check in the report passed */
RRPS_API int rrps_report_passed(const rrps_report *r);
RRPS_API size_t rrps_report_check_count(const rrps_report *r);
/* render as "json", "csv", or "text"; deterministic except the elapsed time */
RRPS_API rrps_status rrps_report_render(rrps_ctx *ctx, const rrps_report *r,
                                        const char *format, char **out);
RRPS_API void rrps_report_free(rrps_report *r);

/* release any char* produced by this library */
RRPS_API void rrps_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* RRPS_H */
