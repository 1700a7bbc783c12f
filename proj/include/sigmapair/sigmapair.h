#ifndef SIGMAPAIR_SIGMAPAIR_H
#define SIGMAPAIR_SIGMAPAIR_H

/*
 * C interface to the sigmapair library: quasichains t_{n+1} = sigma(t_n^m) / t_{n-1},
 * sigma_{m,m} prime pair search, residue profiles, brute-force lemma oracles and the
 * exact log-form inequality certifier.
 *
 * Big integers cross the boundary as NUL-terminated decimal strings. Structured
 * results are UTF-8 JSON. Strings returned through a `char **` out parameter are
 * owned by the caller and released with sp_string_free; strings returned directly
 * by sp_report_* and sp_last_error stay valid until the owning object is freed or
 * the next failing call on the same thread.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SP_API __declspec(dllexport)
#else
#define SP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sp_status {
  SP_OK = 0,
  SP_E_INVALID_ARGUMENT = 1,
  SP_E_PARSE = 2,
  SP_E_PRECONDITION = 3,
  SP_E_NON_INTEGRAL_STEP = 4,
  SP_E_BELOW_CHAIN_START = 5,
  SP_E_PERIOD_NOT_FOUND = 6,
  SP_E_NON_UNIT_RESIDUE = 7,
  SP_E_CHECKPOINT_MISMATCH = 8,
  SP_E_NOT_ON_KNOWN_CHAIN = 9,
  SP_E_INFEASIBLE = 10,
  SP_E_NEGATIVE_MULTIPLIER = 11,
  SP_E_IO = 12,
  SP_E_INTERNAL = 13
} sp_status;

SP_API const char *sp_version(void);
SP_API const char *sp_status_name(sp_status status);

/* Message for the most recent failure on this thread; "" after success. */
SP_API const char *sp_last_error(void);

SP_API void sp_string_free(char *s);

/* ---- integers ---------------------------------------------------------- */

/* {"status": "prime" | "probable_prime" | "composite", "rounds": R, "witness": "..."?} */
SP_API sp_status sp_is_prime(const char *decimal, unsigned rounds, char **verdict_json);

/* 1 + p + ... + p^m as a decimal string. */
SP_API sp_status sp_sigma_power(const char *p, unsigned m, char **out);

/* ---- chains ------------------------------------------------------------ */

typedef struct sp_chain sp_chain;

/* Starts at index 2 with terms (first, second). NULL seeds mean (1, 1). */
SP_API sp_status sp_chain_new(unsigned m, const char *first, const char *second, sp_chain **out);
SP_API sp_status sp_chain_next(sp_chain *chain);
SP_API sp_status sp_chain_prev(sp_chain *chain);
SP_API uint64_t sp_chain_index(const sp_chain *chain);
/* Terms at index-1 and index. Either out pointer may be NULL. */
SP_API sp_status sp_chain_terms(const sp_chain *chain, char **prev, char **curr);
SP_API void sp_chain_free(sp_chain *chain);

/* Index of p on its chain, found by descent to a known seed. */
SP_API sp_status sp_locate_pair(const char *p, const char *q, unsigned m, uint64_t *index);

/* ---- reports ----------------------------------------------------------- */

/* Result of a one-shot computation. */
typedef struct sp_report sp_report;

SP_API const char *sp_report_results_json(const sp_report *report);
/* "[]" except for certifier reports. */
SP_API const char *sp_report_discrepancies_json(const sp_report *report);
/* 0 when an oracle disagreed with its expected set; 1 otherwise. */
SP_API int sp_report_ok(const sp_report *report);
SP_API void sp_report_free(sp_report *report);

SP_API sp_status sp_chain_report(unsigned m, uint64_t terms, sp_report **out);
/* s_0.. and u_0.. sequences; which is 's' or 'u'. */
SP_API sp_status sp_sequence_report(char which, uint64_t count, sp_report **out);
SP_API sp_status sp_u_period(uint64_t *period);
SP_API sp_status sp_seeds_report(unsigned m, uint64_t bound, sp_report **out);
SP_API sp_status sp_residues_report(uint64_t modulus, sp_report **out);
SP_API sp_status sp_residue_pattern_report(uint64_t terms, sp_report **out);

/* Oracle catalogue as JSON: [{"id", "default_bound", "min_bound", "statement"}]. */
SP_API sp_status sp_oracle_catalog(char **json);
/* only == NULL runs every oracle. bound == 0 uses each oracle's default. */
SP_API sp_status sp_lemmas_report(const char *only, uint64_t bound, sp_report **out);

/* Printed multiplier sets checked against their printed results, plus discrepancies. */
SP_API sp_status sp_certify_verify_report(sp_report **out);
/* Optimal certificate for alpha + beta + gamma (or `objective`, "ca cb cc") over the
 * inequalities in `ineqs` (file format text). NULL ineqs uses the built-in
 * five-inequality abc system. */
SP_API sp_status sp_certify_optimize_report(const char *ineqs, const char *objective, sp_report **out);
/* Normalized file-format lines for every built-in inequality. */
SP_API sp_status sp_certify_registry(char **text);

/* horizon == 0 means no horizon. */
SP_API sp_status sp_heuristic_report(uint64_t start_index, uint64_t horizon, sp_report **out);
SP_API sp_status sp_squares_report(uint64_t terms, uint64_t trial_bound, sp_report **out);

/* ---- pair search ------------------------------------------------------- */

typedef struct sp_search_options {
  unsigned m;
  const char *seed_first;  /* NULL: "1" */
  const char *seed_second; /* NULL: "1" */
  uint64_t digits;
  unsigned mr_rounds;
  unsigned threads;
  uint64_t checkpoint_every;
  const char *checkpoint_path; /* NULL: no checkpoint file */
} sp_search_options;

SP_API void sp_search_options_default(sp_search_options *options);

typedef struct sp_search sp_search;

SP_API sp_status sp_search_new(const sp_search_options *options, sp_search **out);
/* Continues from the checkpoint file at options->checkpoint_path. */
SP_API sp_status sp_search_resume(const sp_search_options *options, sp_search **out);
/* max_steps == 0: run to the digit limit. */
SP_API sp_status sp_search_run(sp_search *search, uint64_t max_steps, int *finished);
/* Pair records found so far, as a JSON array. */
SP_API sp_status sp_search_results_json(const sp_search *search, char **json);
/* {"n", "prev", "curr", "pairs"} of the current position. */
SP_API sp_status sp_search_position_json(const sp_search *search, char **json);
/* Writes the checkpoint file now; does nothing when no checkpoint path was given. */
SP_API sp_status sp_search_save(const sp_search *search);
SP_API void sp_search_free(sp_search *search);

#ifdef __cplusplus
}
#endif

#endif /* SIGMAPAIR_SIGMAPAIR_H */
