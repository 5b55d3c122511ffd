/* C interface to the qhall engine.  Every result is a JSON document returned
 * as a heap string the caller releases with qhall_string_free.  Functions
 * return a status code; on failure qhall_last_error() describes it. */
#ifndef QHALL_H
#define QHALL_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  QHALL_OK = 0,
  QHALL_E_INVALID_ARGUMENT = 1,
  QHALL_E_MIXED_FIELD = 2,
  QHALL_E_DIVISION_BY_ZERO = 3,
  QHALL_E_CYCLIC_QUIVER = 4,
  QHALL_E_INCOMPATIBLE_SEED = 5,
  QHALL_E_BOUND_EXCEEDED = 6,
  QHALL_E_INCONSISTENT_COUNT = 7,
  QHALL_E_PARSE = 8,
  QHALL_E_UNKNOWN_LABEL = 9,
  QHALL_E_NOT_REPRESENTATION_FINITE = 10,
  QHALL_E_INTERNAL = 11,
  QHALL_E_UNKNOWN = 99
} qhall_status;

typedef struct qhall_context qhall_context;

typedef struct {
  int samples;
  uint64_t rng_seed;
  int max_dim;
  int proj_copies;
  int appendix_dim;
  int qca_depth; /* 0: 5 for rank <= 2, 8 above */
} qhall_suite_options;

/* Message for the last failing call on this thread; never NULL. */
const char* qhall_last_error(void);
const char* qhall_status_name(qhall_status s);
void qhall_string_free(char* s);

/* config_json: the quiver config document.  cache_dir may be NULL or "" to
 * skip the catalog cache. */
qhall_status qhall_context_new(const char* config_json, const char* cache_dir, qhall_context** out);
void qhall_context_free(qhall_context* ctx);

/* Exchange matrix, Lambda, compatibility verdicts and sampled form identities.
 * *ok is 1 when every check holds. */
qhall_status qhall_check_seed(const qhall_context* ctx, int samples, uint64_t rng_seed, char** out_json, int* ok);

/* Indecomposables of the module catalog over Q. */
qhall_status qhall_catalog(const qhall_context* ctx, char** out_json);

/* what: hall-product | delta | psi | ccchar | gvector | dh-psi.
 * hall-product multiplies all literals with the twisted product; the other
 * operations take exactly one literal.  *verdict is 0 when a computed
 * equality (psi, dh-psi, gvector) fails and 1 otherwise. */
qhall_status qhall_compute(const qhall_context* ctx, const char* what, const char* const* literals, int count,
                           char** out_json, int* verdict);

/* Names of the verification suites as a JSON array. */
qhall_status qhall_suite_names(char** out_json);
qhall_suite_options qhall_suite_options_default(void);
qhall_status qhall_verify(const qhall_context* ctx, const char* suite, const qhall_suite_options* opts,
                          char** out_json, int* passed);

/* Quantum cluster variables from mutation against Psi of rigid
 * indecomposables and shifted projectives.  depth 0 picks the default. */
qhall_status qhall_cluster_compare(const qhall_context* ctx, int depth, char** out_json, int* all_matched);

#ifdef __cplusplus
}
#endif

#endif
