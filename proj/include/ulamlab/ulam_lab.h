/*
 * C interface to the Ulam-sequence and addition-chain library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a ulam_status; on
 * failure a human-readable detail is available from ulam_last_error() on the
 * calling thread until the next failing call on that thread.
 *
 * Calls that fill caller-provided arrays take a capacity and report the
 * required element count through `count`. When the capacity is too small the
 * call returns ULAM_ERR_BUFFER_TOO_SMALL and writes nothing else, so passing
 * (NULL, 0) queries the size.
 */
#ifndef ULAMLAB_ULAM_LAB_H
#define ULAMLAB_ULAM_LAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ULAMLAB_BUILDING)
#    define ULAMLAB_API __declspec(dllexport)
#  else
#    define ULAMLAB_API __declspec(dllimport)
#  endif
#else
#  define ULAMLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ulam_status {
  ULAM_OK = 0,
  ULAM_ERR_NULL_ARGUMENT = 1,
  ULAM_ERR_CONTRACT = 2,          /* input violates the operation's contract */
  ULAM_ERR_DOMAIN = 3,            /* argument outside a formula's domain */
  ULAM_ERR_BUDGET_EXHAUSTED = 4,  /* search stopped early; partial result filled */
  ULAM_ERR_BUFFER_TOO_SMALL = 5,
  ULAM_ERR_OUT_OF_MEMORY = 6,
  ULAM_ERR_INTERNAL = 7
} ulam_status;

typedef enum ulam_algorithm { ULAM_ALGO_NAIVE = 0, ULAM_ALGO_FAST = 1 } ulam_algorithm;

typedef enum ulam_validity_mode { ULAM_MODE_GENERAL = 0, ULAM_MODE_STAR = 1 } ulam_validity_mode;

typedef enum ulam_violation_kind {
  ULAM_VIOLATION_EMPTY = 0,
  ULAM_VIOLATION_BAD_FIRST_TERM = 1,
  ULAM_VIOLATION_BAD_SECOND_TERM = 2,
  ULAM_VIOLATION_NOT_INCREASING = 3,
  ULAM_VIOLATION_NOT_A_SUM = 4,
  ULAM_VIOLATION_NOT_STAR_STEP = 5
} ulam_violation_kind;

typedef enum ulam_trend_verdict {
  ULAM_TREND_FLATTENING = 0,
  ULAM_TREND_DECLINING = 1,
  ULAM_TREND_INCONCLUSIVE = 2
} ulam_trend_verdict;

typedef struct ulam_sequence ulam_sequence;
typedef struct ulam_chain ulam_chain;
typedef struct ulam_violations ulam_violations;

ULAMLAB_API const char *ulam_version(void);
ULAMLAB_API const char *ulam_status_string(ulam_status status);
ULAMLAB_API const char *ulam_last_error(void);

/* ---- Ulam sequences ---------------------------------------------------- */

/* All Ulam numbers <= limit (inclusive). */
ULAMLAB_API ulam_status ulam_sequence_generate(uint64_t limit, ulam_algorithm algo, ulam_sequence **out);
/* The first `count` Ulam numbers; the limit is set to the last term. */
ULAMLAB_API ulam_status ulam_sequence_first(size_t count, ulam_sequence **out);
/* Wraps an arbitrary list for verification. No checks are made here. */
ULAMLAB_API ulam_status ulam_sequence_from_terms(const uint64_t *terms, size_t n, uint64_t limit,
                                                 ulam_sequence **out);
ULAMLAB_API void ulam_sequence_free(ulam_sequence *seq);
ULAMLAB_API size_t ulam_sequence_size(const ulam_sequence *seq);
ULAMLAB_API const uint64_t *ulam_sequence_terms(const ulam_sequence *seq);
ULAMLAB_API uint64_t ulam_sequence_limit(const ulam_sequence *seq);
ULAMLAB_API ulam_status ulam_next_term(const ulam_sequence *seq, uint64_t *out);

typedef struct ulam_verify_summary {
  size_t structure_failures;
  size_t uniqueness_failures;
  size_t completeness_failures;
  size_t lemma_failures;
  /* First offending value or 1-based index per category, 0 when none. */
  size_t first_structure_index;
  uint64_t first_uniqueness_term;
  uint64_t first_completeness_value;
  size_t first_lemma_index;
} ulam_verify_summary;

ULAMLAB_API ulam_status ulam_sequence_verify(const ulam_sequence *seq, ulam_verify_summary *out);

ULAMLAB_API ulam_status ulam_count_representations(const uint64_t *prefix, size_t n, uint64_t x,
                                                   uint64_t *count);

/* 1-based indices m > 3 with terms[m] = terms[m-1] + terms[m-2]. */
ULAMLAB_API ulam_status ulam_consecutive_sum_violations(const uint64_t *terms, size_t n, size_t *indices,
                                                        size_t capacity, size_t *count);

typedef struct ulam_gap_bucket {
  uint64_t gap;
  uint64_t occurrences;
} ulam_gap_bucket;

/* Buckets are ordered by increasing gap. */
ULAMLAB_API ulam_status ulam_gap_statistics(const uint64_t *terms, size_t n, uint64_t *max_gap,
                                            ulam_gap_bucket *buckets, size_t capacity, size_t *count);

/* ---- Addition chains --------------------------------------------------- */

ULAMLAB_API ulam_status ulam_chain_create(const uint64_t *terms, size_t n, ulam_chain **out);
ULAMLAB_API void ulam_chain_free(ulam_chain *chain);
ULAMLAB_API size_t ulam_chain_size(const ulam_chain *chain);
ULAMLAB_API const uint64_t *ulam_chain_terms(const ulam_chain *chain);
/* Number of generator steps (size - 1). */
ULAMLAB_API size_t ulam_chain_length(const ulam_chain *chain);

typedef struct ulam_violation {
  size_t index; /* 1-based; 0 for an empty chain */
  ulam_violation_kind kind;
  const char *reason; /* owned by the ulam_violations list */
} ulam_violation;

ULAMLAB_API ulam_status ulam_chain_validate(const ulam_chain *chain, ulam_validity_mode mode,
                                            ulam_violations **out);
ULAMLAB_API size_t ulam_violations_count(const ulam_violations *list);
ULAMLAB_API ulam_status ulam_violations_get(const ulam_violations *list, size_t i, ulam_violation *out);
ULAMLAB_API void ulam_violations_free(ulam_violations *list);
ULAMLAB_API const char *ulam_violation_kind_string(ulam_violation_kind kind);

typedef struct ulam_generator {
  uint64_t determiner;
  uint64_t regulator;
} ulam_generator;

ULAMLAB_API ulam_status ulam_chain_decompose(const ulam_chain *chain, ulam_generator *out, size_t capacity,
                                             size_t *count);
ULAMLAB_API ulam_status ulam_chain_regulator_sum(const ulam_chain *chain, uint64_t *out);

typedef struct ulam_chain_constant {
  uint64_t n;
  uint64_t delta;
  int64_t c_num; /* c = (n - 1) / delta in lowest terms */
  int64_t c_den;
  uint64_t inf_r;
  uint64_t sup_r;
} ulam_chain_constant;

ULAMLAB_API ulam_status ulam_chain_constant_compute(const ulam_chain *chain, ulam_chain_constant *out);

ULAMLAB_API int ulam_hamming_weight(uint64_t n);
ULAMLAB_API ulam_status ulam_schonhage_lower_bound(uint64_t n, double *out);
/* The o(1) term is taken as 0: indicative values, not bounds. */
ULAMLAB_API ulam_status ulam_upper_bound_indicative(uint64_t n, double *out);
ULAMLAB_API ulam_status ulam_constant_floor(uint64_t n, double *out);

typedef struct ulam_shortest_result {
  uint64_t n;
  int exact;      /* nonzero when lower == upper == iota(n) */
  uint32_t lower; /* proven lower bound on iota(n) */
  uint32_t upper; /* length of the witness */
  uint64_t nodes;
} ulam_shortest_result;

/* node_budget 0 means unlimited. Returns ULAM_ERR_BUDGET_EXHAUSTED with a
 * filled partial result when the budget runs out. `witness` may be NULL. */
ULAMLAB_API ulam_status ulam_shortest_chain(uint64_t n, uint64_t node_budget, ulam_shortest_result *out,
                                            ulam_chain **witness);
/* Results for n = 1..max_n into out[0..max_n-1]. threads == 0 picks the
 * hardware concurrency, capped by the ULAM_LAB_THREADS environment variable. */
ULAMLAB_API ulam_status ulam_shortest_chain_table(uint64_t max_n, uint64_t node_budget, unsigned threads,
                                                  ulam_shortest_result *out);

/* Star-valid chain covering a leading Ulam prefix. */
ULAMLAB_API ulam_status ulam_embed(const uint64_t *ulam_terms, size_t n, ulam_chain **out);

/* ---- Density ----------------------------------------------------------- */

typedef struct ulam_majorant_record {
  uint64_t n;
  uint64_t u_n;
  uint64_t delta;
  int64_t c_num;
  int64_t c_den;
  uint64_t l;
  int64_t bound_num; /* 1/c + 1/l */
  int64_t bound_den;
  int64_t actual_num; /* n/l */
  int64_t actual_den;
  double one_over_c;
  double bound;
  double actual;
  int count_check;    /* n <= delta + 1 */
  int majorant_check; /* actual <= bound */
  int has_floor;      /* u_n >= 3 */
  double floor;       /* indicative */
  int meets_floor;
} ulam_majorant_record;

ULAMLAB_API ulam_status ulam_covering_report(const uint64_t *ulam_terms, size_t n, uint64_t l,
                                             ulam_majorant_record *out);
/* One record per count, evaluated at l = U_n. `out` holds n entries. */
ULAMLAB_API ulam_status ulam_majorant_series(const uint64_t *term_counts, size_t n, ulam_majorant_record *out);

typedef struct ulam_density_record {
  uint64_t k;
  uint64_t count;
  int64_t ratio_num; /* count / k in lowest terms */
  int64_t ratio_den;
  double ratio;
} ulam_density_record;

/* `out` holds n entries. */
ULAMLAB_API ulam_status ulam_density_series(uint64_t limit, const uint64_t *checkpoints, size_t n,
                                            ulam_density_record *out);

typedef struct ulam_trend_summary {
  double last_window_mean;
  double slope;
  double max_oscillation;
  ulam_trend_verdict verdict;
} ulam_trend_summary;

ULAMLAB_API ulam_status ulam_convergence_diagnostic(const ulam_density_record *records, size_t n,
                                                    ulam_trend_summary *out);
ULAMLAB_API const char *ulam_trend_verdict_string(ulam_trend_verdict verdict);

#ifdef __cplusplus
}
#endif

#endif /* ULAMLAB_ULAM_LAB_H */
