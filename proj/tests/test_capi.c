/* Exercises the C interface from plain C. */
#include <stdio.h>
#include <string.h>

#include "qhall/qhall.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static const char* kA2 = "{\"vertices\":2,\"arrows\":[[1,2,1]],\"q\":2,\"max_dim\":3}";

int main(void) {
  qhall_context* ctx = NULL;
  char* out = NULL;
  int flag = -1;

  EXPECT(qhall_context_new("{", NULL, &ctx) == QHALL_E_PARSE);
  EXPECT(ctx == NULL);
  EXPECT(strlen(qhall_last_error()) > 0);
  EXPECT(qhall_context_new("{\"vertices\":2,\"arrows\":[[1,2],[2,1]]}", NULL, &ctx) == QHALL_E_CYCLIC_QUIVER);
  EXPECT(qhall_context_new(NULL, NULL, &ctx) == QHALL_E_INVALID_ARGUMENT);
  EXPECT(strcmp(qhall_status_name(QHALL_E_UNKNOWN_LABEL), "unknown-label") == 0);

  EXPECT(qhall_context_new(kA2, "", &ctx) == QHALL_OK);
  EXPECT(ctx != NULL);

  EXPECT(qhall_check_seed(ctx, 20, 7, &out, &flag) == QHALL_OK);
  EXPECT(flag == 1);
  EXPECT(strstr(out, "\"compatible\": true") != NULL);
  qhall_string_free(out);

  EXPECT(qhall_catalog(ctx, &out) == QHALL_OK);
  EXPECT(strstr(out, "\"S1\"") != NULL && strstr(out, "\"P1\"") != NULL);
  qhall_string_free(out);

  const char* lit[] = {"X(M=S2)"};
  EXPECT(qhall_compute(ctx, "psi", lit, 1, &out, &flag) == QHALL_OK);
  EXPECT(flag == 1);
  EXPECT(strstr(out, "\"equal\": true") != NULL);
  qhall_string_free(out);

  EXPECT(qhall_compute(ctx, "gvector", lit, 1, &out, &flag) == QHALL_OK);
  EXPECT(flag == 1);
  qhall_string_free(out);

  const char* two[] = {"K[1,0]", "K[0,1]"};
  EXPECT(qhall_compute(ctx, "hall-product", two, 2, &out, &flag) == QHALL_OK);
  EXPECT(strstr(out, "\"alpha\"") != NULL);
  qhall_string_free(out);

  const char* bad[] = {"X(M=S7)"};
  out = NULL;
  EXPECT(qhall_compute(ctx, "psi", bad, 1, &out, &flag) == QHALL_E_UNKNOWN_LABEL);
  EXPECT(out == NULL);
  EXPECT(qhall_compute(ctx, "frobnicate", lit, 1, &out, &flag) == QHALL_E_INVALID_ARGUMENT);

  qhall_suite_options o = qhall_suite_options_default();
  o.samples = 10;
  EXPECT(qhall_verify(ctx, "psi", &o, &out, &flag) == QHALL_OK);
  EXPECT(flag == 1);
  EXPECT(strstr(out, "\"rng_seed\"") != NULL);
  qhall_string_free(out);
  EXPECT(qhall_verify(ctx, "nope", &o, &out, &flag) == QHALL_E_INVALID_ARGUMENT);

  EXPECT(qhall_suite_names(&out) == QHALL_OK);
  EXPECT(strstr(out, "\"appendix\"") != NULL);
  qhall_string_free(out);

  EXPECT(qhall_cluster_compare(ctx, 0, &out, &flag) == QHALL_OK);
  EXPECT(flag == 1);
  EXPECT(strstr(out, "\"mutation_path\"") != NULL);
  qhall_string_free(out);

  qhall_context_free(ctx);
  qhall_context_free(NULL);
  if (failures) fprintf(stderr, "%d failures\n", failures);
  return failures ? 1 : 0;
}
