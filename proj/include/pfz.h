/*
 * pfz: exact-arithmetic solvers for projective spaces over Z/n.
 *
 * All payloads cross this boundary as JSON strings. Integers are JSON
 * numbers when they fit in 64 bits and decimal strings otherwise. Points
 * are {"modulus": n, "coords": [a0, ..., ak]}; matrices are arrays of rows.
 * Output strings are allocated by the library and must be released with
 * pfz_string_free.
 */

#ifndef PFZ_H
#define PFZ_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pfz_ctx pfz_ctx;

typedef enum pfz_status {
  PFZ_OK = 0,
  PFZ_ERR_VERIFY = 1,   /* a certificate or suite failed verification */
  PFZ_ERR_PARSE = 2,    /* malformed JSON or schema violation */
  PFZ_ERR_DOMAIN = 3,   /* precondition violated (incl. budget overrun) */
  PFZ_ERR_INTERNAL = 4
} pfz_status;

const char* pfz_version(void);

pfz_ctx* pfz_ctx_new(void);
void pfz_ctx_free(pfz_ctx* ctx);

/* Cap on brute-force enumeration sizes (number of tuples/matrices). */
void pfz_ctx_set_enum_budget(pfz_ctx* ctx, uint64_t budget);
/* Seed for the randomized parts of verification suites. */
void pfz_ctx_set_seed(pfz_ctx* ctx, uint64_t seed);
/* Message for the most recent failing call on this context. */
const char* pfz_last_error(const pfz_ctx* ctx);

/* request: {"modulus": n, "dim": k}
 * reply:   {"count": c, "points": [point, ...]} in sorted order */
pfz_status pfz_enumerate(pfz_ctx* ctx, const char* request_json, char** out_json);

/* request: {"modulus": n, "matrix": rows}
 * reply:   {"lift": rows, "determinant": 1, "reduction_matches": true, "pass": bool} */
pfz_status pfz_lift_sl(pfz_ctx* ctx, const char* request_json, char** out_json);

/* request: {"points": [point, ...]} with pairwise coprime moduli
 * reply:   {"point": lifted point, "reductions_match": true} */
pfz_status pfz_crt_lift(pfz_ctx* ctx, const char* request_json, char** out_json);

/* request: {"targets": [point, ...]}; k targets of dim k-1
 * reply:   solve report (see README) */
pfz_status pfz_sigma_solve(pfz_ctx* ctx, const char* request_json, char** out_json);

/* request: {"rows": r, "cols": k, "targets": [point, ...]} */
pfz_status pfz_grassmann_solve(pfz_ctx* ctx, const char* request_json, char** out_json);

/* request: {"targets": [point, ...]}; r >= 2 targets */
pfz_status pfz_sumproduct_solve(pfz_ctx* ctx, const char* request_json, char** out_json);

/* request: {"suite": "crt"|"sl"|"sigma"|"sumproduct"|"fixedpoint",
 *           "max_modulus": m (optional)}
 * reply:   {"suite":..., "cases":..., "failures":..., "pass": bool, ...} */
pfz_status pfz_verify_suite(pfz_ctx* ctx, const char* request_json, char** out_json);

void pfz_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* PFZ_H */
