/* C interface to the Kostka-cone geometry library.
 *
 * Every computation takes an opaque context carrying resource caps and the
 * last error message, returns a status code, and writes its result as a
 * NUL-terminated JSON document (JSON Lines for face dumps) that the caller
 * releases with kostka_string_free.
 */
#ifndef KOSTKA_H
#define KOSTKA_H

#include <stdint.h>

#if defined(_WIN32) || defined(__CYGWIN__)
#define KOSTKA_API __declspec(dllexport)
#else
#define KOSTKA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct kostka_ctx kostka_ctx;

enum {
  KOSTKA_OK = 0,
  KOSTKA_EINTERNAL = 1, /* unexpected failure; see kostka_last_error */
  KOSTKA_EINVAL = 2,    /* malformed or out-of-range input */
  KOSTKA_ERESOURCE = 3  /* a configured cap was hit */
};

/* Caps are seeded from KOSTKA_MAX_FACES and KOSTKA_TIME_BUDGET (seconds)
 * when set in the environment. */
KOSTKA_API kostka_ctx* kostka_ctx_new(void);
KOSTKA_API void kostka_ctx_free(kostka_ctx* ctx);
KOSTKA_API void kostka_ctx_set_max_faces(kostka_ctx* ctx, uint64_t cap);
KOSTKA_API void kostka_ctx_set_time_budget(kostka_ctx* ctx, double seconds);
KOSTKA_API const char* kostka_last_error(const kostka_ctx* ctx);

KOSTKA_API const char* kostka_version(void);
KOSTKA_API void kostka_string_free(char* s);

/* Ray labels, generators and primitive generators of the rank-r cone. */
KOSTKA_API int kostka_rays(kostka_ctx* ctx, int r, char** out_json);

/* Facet hyperplanes through the ray (a, b, l); (a, a, x) names the
 * rectangle ray. */
KOSTKA_API int kostka_incidence(kostka_ctx* ctx, int r, int a, int b, int l,
                                char** out_json);

/* Face counts by dimension (dim = -2 for all dimensions). */
KOSTKA_API int kostka_face_counts(kostka_ctx* ctx, int r, int dim,
                                  char** out_json);

/* Face dump, one JSON object per line (dim = -2 for all dimensions). */
KOSTKA_API int kostka_faces(kostka_ctx* ctx, int r, int dim,
                            char** out_jsonl);

/* Smallest face containing the given labels (JSON array of [a,b,l]). */
KOSTKA_API int kostka_minimal_face(kostka_ctx* ctx, int r,
                                   const char* labels_json, char** out_json);

/* Whether two rays span an edge, by the direct two-label test. */
KOSTKA_API int kostka_edge(kostka_ctx* ctx, int r, int a1, int b1, int l1,
                           int a2, int b2, int l2, char** out_json);

/* Largest vertex count among d-faces, with a witness. */
KOSTKA_API int kostka_max_face(kostka_ctx* ctx, int r, int d,
                               char** out_json);

/* The stable (large-r) value of the same maximum. */
KOSTKA_API int kostka_max_face_closed_form(kostka_ctx* ctx, long long d,
                                           char** out_json);

/* Binomial-basis coefficients of the d-face count polynomial. values_json
 * may map rank -> count ({"2":3,...}); pass NULL to enumerate the needed
 * counts under the context caps. */
KOSTKA_API int kostka_fit(kostka_ctx* ctx, long long d,
                          const char* values_json, char** out_json);

KOSTKA_API int kostka_f_vector(kostka_ctx* ctx, int r, char** out_json);

/* check_tail != 0 adds the h_k = 1 (k >= r-1) verdict. */
KOSTKA_API int kostka_h_vector(kostka_ctx* ctx, int r, int check_tail,
                               char** out_json);

/* Hilbert-basis membership of {"r":..,"lambda":[..],"mu":[..]}. */
KOSTKA_API int kostka_hb_check(kostka_ctx* ctx, const char* point_json,
                               char** out_json);

/* The three coprimality conditions for a first-column pair; integers are
 * decimal strings to allow arbitrary size. */
KOSTKA_API int kostka_classify_initial(kostka_ctx* ctx, const char* lambda1,
                                       const char* mu1, char** out_json);

/* All pairs mu1 < lambda1 <= range failing all three conditions. */
KOSTKA_API int kostka_classify_range(kostka_ctx* ctx, long long range,
                                     char** out_json);

/* family is "gcd1" or "gcd2". */
KOSTKA_API int kostka_construct(kostka_ctx* ctx, const char* family,
                                const char* lambda1, const char* mu1,
                                char** out_json);

/* Exhaustive certificate scan; budget counts candidate pairs tested. */
KOSTKA_API int kostka_scan_initial(kostka_ctx* ctx, const char* lambda1,
                                   const char* mu1, int r, uint64_t budget,
                                   char** out_json);

/* Bracket for the coprimality probability, Euler products cut at B. */
KOSTKA_API int kostka_probability(kostka_ctx* ctx, int64_t B,
                                  char** out_json);

/* Exact density of the chosen conditions (1..3) over pairs m < n <= N. */
KOSTKA_API int kostka_density(kostka_ctx* ctx, int64_t N, const int* conds,
                              int n_conds, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* KOSTKA_H */
