#ifndef SUNITGCD_SUNITGCD_H
#define SUNITGCD_SUNITGCD_H

/*
 * C interface to the S-unit height/gcd toolkit.
 *
 * Conventions:
 *   - Rationals cross the boundary as canonical strings "a" or "a/b".
 *   - Structured inputs and outputs are JSON documents (UTF-8); the schema
 *     files shipped under schemas/ describe every document.
 *   - Every returned char* is heap-allocated and must be released with
 *     sug_string_free.
 *   - On failure the return status is nonzero and sug_last_error() holds a
 *     message for the calling thread; for expression parse errors
 *     sug_last_error_offset() is the byte offset of the first offending
 *     character.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Mirrored by the command-line tool's exit codes. */
typedef enum sug_status {
  SUG_OK = 0,
  SUG_ERR_CONFIG = 2,    /* malformed config, input, or expression */
  SUG_ERR_UNDECIDED = 3, /* an undecided comparison was reported */
  SUG_ERR_INTERNAL = 4   /* internal invariant violation */
} sug_status;

const char* sug_version(void);

const char* sug_last_error(void);
size_t sug_last_error_offset(void);

void sug_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Expressions                                                         */
/* ------------------------------------------------------------------ */

typedef struct sug_function sug_function;

/* Parses a polynomial or quotient expression in X, Y. */
sug_status sug_function_parse(const char* text, sug_function** out);
void sug_function_free(sug_function* f);

/* Canonical printed form; parsing it again yields the same function. */
sug_status sug_function_print(const sug_function* f, char** out);

/* {"points": [[i, j], ...], "d1": .., "d2": .., "contains_one": ..} */
sug_status sug_function_monomials_json(const sug_function* f, char** out);

/* ------------------------------------------------------------------ */
/* Exact primitives                                                    */
/* ------------------------------------------------------------------ */

/* H(x) for a rational string; exact integer result as a string. */
sug_status sug_height(const char* rational, char** out);

/* Projective height of (x_0 : ... : x_{n-1}); exact string result. */
sug_status sug_height_projective(const char* const* coords, size_t n,
                                 char** out);

/* v_p(x) for x != 0 and prime p. */
sug_status sug_valuation(const char* rational, const char* prime, long* out);

/* Prime factorization of |n| as [[p, e], ...] in JSON. */
sug_status sug_factor_json(const char* integer, char** out);

/* Exact product-formula check; *holds is 1 or 0 (always 1 for x != 0). */
sug_status sug_product_formula_check(const char* rational, int* holds);

/* ------------------------------------------------------------------ */
/* Command cores                                                       */
/* ------------------------------------------------------------------ */

/*
 * gcd(a^n - 1, b^n - 1) table for n = 1..n_max, written as CSV to csv_path
 * ("-" for stdout).  *warn_dependent is set to 1 when a and b are
 * multiplicatively dependent.
 */
sug_status sug_gcd_growth_csv(const char* a, const char* b, long n_max,
                              const char* csv_path, int* warn_dependent);

/*
 * (u-1)/(v-1) height-ratio table.  config_json keys: s_primes,
 * exponent_bound, signs, output.  csv_path overrides the config output when
 * non-NULL.  *footer_json receives the run totals.
 */
sug_status sug_ratio_scan(const char* config_json, const char* csv_path,
                          char** footer_json);

/*
 * Inequality scan over pairs of S-units.  config_json follows
 * schemas/scan_config.schema.json.  *report_json receives the document
 * {params, candidates, solutions, skipped}; *undecided the number of
 * undecided comparisons (structurally zero; reported for the exit-code
 * contract).
 */
sug_status sug_exceptional_scan(const char* config_json, char** report_json,
                                long* undecided);

/*
 * Candidate subtorus relations.  request_json: {"mode": "support",
 * "function": ...} | {"mode": "bounded", "epsilon": ...} |
 * {"mode": "translated", "epsilon": ..., "theta": ..., "eta": ...}.
 */
sug_status sug_candidates_json(const char* request_json, char** report_json);

/*
 * Inequality-chain ledger for one pair of S-units.  request_json:
 * {"u": "16", "v": "81", "epsilon": "1/4", "s_primes": [2, 3]}.
 */
sug_status sug_proof_trace_json(const char* request_json, char** report_json);

/* Exact-identity suites; *all_passed is 1 when every suite passed. */
sug_status sug_selfcheck_json(char** report_json, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* SUNITGCD_SUNITGCD_H */
