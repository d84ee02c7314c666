/* C interface to the collide library: exact, simulated and asymptotic laws
 * for collisions when balls are thrown uniformly into bins.
 *
 * Every fallible call returns a collide_status. On failure, a message for the
 * calling thread is available from collide_last_error() until the next call.
 * Objects returned through out-pointers are owned by the caller and released
 * with the matching *_free function. Strings returned as char* are released
 * with collide_string_free.
 */
#ifndef COLLIDE_H
#define COLLIDE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(COLLIDE_BUILDING_LIBRARY)
#    define COLLIDE_API __declspec(dllexport)
#  else
#    define COLLIDE_API __declspec(dllimport)
#  endif
#else
#  define COLLIDE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum collide_status {
  COLLIDE_OK = 0,
  COLLIDE_INVALID_ARGUMENT = 1,
  COLLIDE_RESOURCE_LIMIT = 2,
  COLLIDE_OUT_OF_REGIME = 3,
  COLLIDE_INTERNAL_ERROR = 4
} collide_status;

COLLIDE_API const char* collide_version(void);
COLLIDE_API const char* collide_last_error(void);
COLLIDE_API void collide_string_free(char* s);

/* ---- exact laws ------------------------------------------------------- */

typedef struct collide_pmf collide_pmf;

/* max_states caps the dynamic program size; 0 selects the default (2e8). */
COLLIDE_API collide_status collide_collision_pmf(uint64_t n, uint64_t b, uint64_t max_states, collide_pmf** out);
COLLIDE_API collide_status collide_occupied_pmf(uint64_t n, uint64_t b, uint64_t max_states, collide_pmf** out);
COLLIDE_API collide_status collide_balls_needed_pmf(uint64_t n, uint64_t c, uint64_t max_states, collide_pmf** out);
COLLIDE_API collide_status collide_pmf_from_json(const char* json, collide_pmf** out);
COLLIDE_API void collide_pmf_free(collide_pmf* pmf);

COLLIDE_API int64_t collide_pmf_support_min(const collide_pmf* pmf);
COLLIDE_API size_t collide_pmf_size(const collide_pmf* pmf);
/* Pointer to collide_pmf_size() masses, valid while pmf lives. */
COLLIDE_API const double* collide_pmf_masses(const collide_pmf* pmf);
COLLIDE_API collide_status collide_pmf_moment(const collide_pmf* pmf, unsigned k, double center, double* out);
COLLIDE_API collide_status collide_pmf_quantile(const collide_pmf* pmf, double p, int64_t* out);
COLLIDE_API collide_status collide_pmf_to_json(const collide_pmf* pmf, char** out);

COLLIDE_API collide_status collide_expected_collisions(uint64_t n, uint64_t b, double* out);

/* ---- random streams and simulation ------------------------------------ */

typedef struct collide_rng collide_rng;

COLLIDE_API collide_status collide_rng_new(uint64_t seed, uint64_t stream, collide_rng** out);
COLLIDE_API void collide_rng_free(collide_rng* rng);

/* Writes `count` Poisson arrival times (partial sums of Exponential(1)). */
COLLIDE_API collide_status collide_sample_arrivals(collide_rng* rng, size_t count, double* times);

typedef enum collide_stop_kind { COLLIDE_STOP_BALLS = 0, COLLIDE_STOP_COLLISIONS = 1 } collide_stop_kind;

typedef struct collide_trajectory_summary {
  uint64_t n;
  uint64_t balls;
  uint64_t occupied;
  uint64_t collisions;
  uint64_t empty;
  uint64_t max_load; /* largest k with N_k > 0 */
} collide_trajectory_summary;

/* One run. When stop is COLLIDE_STOP_COLLISIONS and first_passages is not
 * NULL, it receives B(1,n)..B(target,n). */
COLLIDE_API collide_status collide_simulate_throws(collide_rng* rng, uint64_t n, collide_stop_kind stop,
                                                   uint64_t target, collide_trajectory_summary* out,
                                                   uint64_t* first_passages);

/* `count` independent draws of B(c, n) by direct simulation. */
COLLIDE_API collide_status collide_sample_balls_needed(collide_rng* rng, uint64_t n, uint64_t c, size_t count,
                                                       uint64_t* out);

/* `count` coupled pairs (C, C') with C' size-biased and C' - C in {0, 1}. */
COLLIDE_API collide_status collide_size_biased_pairs(collide_rng* rng, uint64_t n, uint64_t b, size_t count,
                                                     uint64_t* c_out, uint64_t* c_biased_out);

/* ---- embedding -------------------------------------------------------- */

typedef struct collide_path collide_path;

typedef struct collide_path_record {
  uint64_t c;
  uint64_t balls;    /* B(c, n) */
  double arrival;    /* T_c */
  uint64_t occupied; /* J(c, n) = B(c, n) - c */
  double remainder;  /* R(c) */
} collide_path_record;

typedef struct collide_sandwich_summary {
  size_t checked;
  size_t lower_violations;
  size_t upper_violations;
  size_t combined_checked;
  size_t combined_violations;
  double min_lower_slack;
  double min_upper_slack;
  double min_combined_slack;
} collide_sandwich_summary;

COLLIDE_API collide_status collide_f_hazard(double p, double* out);
COLLIDE_API collide_status collide_a_accum(uint64_t i, uint64_t n, double* out);
COLLIDE_API collide_status collide_embed_path(const double* arrivals, size_t count, uint64_t n, uint64_t c_max,
                                              collide_path** out);
COLLIDE_API void collide_path_free(collide_path* path);
/* Number of records, including the c = 0 base record. */
COLLIDE_API size_t collide_path_size(const collide_path* path);
COLLIDE_API collide_status collide_path_record_at(const collide_path* path, size_t index, collide_path_record* out);
COLLIDE_API collide_status collide_path_to_jsonl(const collide_path* path, char** out);
COLLIDE_API collide_status collide_check_sandwich(const collide_path* path, collide_sandwich_summary* out);

/* ---- asymptotics ------------------------------------------------------ */

typedef enum collide_law { COLLIDE_LAW_RAYLEIGH = 0, COLLIDE_LAW_CHI_2C = 1, COLLIDE_LAW_NORMAL = 2 } collide_law;
typedef enum collide_regime {
  COLLIDE_REGIME_FIXED_C = 0,
  COLLIDE_REGIME_GROWING_SUBLINEAR = 1,
  COLLIDE_REGIME_CENTRAL = 2
} collide_regime;

COLLIDE_API collide_status collide_gamma_c(uint64_t c, double* out);
COLLIDE_API collide_status collide_gamma_c_series(uint64_t c, double* out);
COLLIDE_API collide_status collide_w(double x, double* out);
COLLIDE_API collide_status collide_w_inverse(double delta, double* out);
COLLIDE_API collide_status collide_beta_center(double c, double n, double* out);
COLLIDE_API collide_status collide_d(double x, double* out);
COLLIDE_API collide_status collide_g(double x, double* out);
/* c is used only for COLLIDE_LAW_CHI_2C. */
COLLIDE_API collide_status collide_limit_cdf(collide_law law, uint64_t c, double x, double* out);
COLLIDE_API collide_status collide_moments_approx(uint64_t c, uint64_t n, collide_regime regime, double alpha0,
                                                  double* mean, double* variance);

/* ---- concentration bounds --------------------------------------------- */

typedef enum collide_bound_kind {
  COLLIDE_BOUND_CRUCIAL = 0,
  COLLIDE_BOUND_CRUCIAL_PROOF_END = 1,
  COLLIDE_BOUND_AZUMA_UPPER = 2,
  COLLIDE_BOUND_AZUMA_LOWER = 3,
  COLLIDE_BOUND_GHOSH_LOWER = 4,
  COLLIDE_BOUND_GHOSH_UPPER = 5,
  COLLIDE_BOUND_CENTERED = 6
} collide_bound_kind;

typedef struct collide_bound_query {
  collide_bound_kind kind;
  uint64_t n;
  uint64_t b;
  uint64_t c;
  double t; /* t, or y for COLLIDE_BOUND_CENTERED */
  double K;
} collide_bound_query;

typedef struct collide_bound_result {
  double value; /* clamped to at most 1 */
  double raw;
  int clamped;
  int caveat; /* holds only beyond an unspecified n0 */
} collide_bound_result;

COLLIDE_API collide_status collide_bound(const collide_bound_query* query, collide_bound_result* out);

/* ---- statistics and verification -------------------------------------- */

COLLIDE_API collide_status collide_ks_statistic(const double* samples, size_t count, collide_law law, uint64_t c,
                                                double* out);

/* config_json NULL runs the built-in default configuration. report_json
 * receives the JSON report, report_table (optional) a text table, and
 * all_passed is set to 1 when every scenario passed. */
COLLIDE_API collide_status collide_verify_run(const char* config_json, char** report_json, char** report_table,
                                              int* all_passed);
COLLIDE_API collide_status collide_verify_default_config(char** out);

#ifdef __cplusplus
}
#endif

#endif /* COLLIDE_H */
