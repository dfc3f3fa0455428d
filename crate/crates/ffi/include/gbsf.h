#ifndef GBSF_H
#define GBSF_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  GBSF_STATUS_OK = 0,
  GBSF_STATUS_INVALID_ARGUMENT = 1,
  GBSF_STATUS_INVALID_PERMUTATION = 2,
  GBSF_STATUS_NOT_SQUAREFREE = 3,
  GBSF_STATUS_PARSE = 4,
  GBSF_STATUS_DEGENERATE = 5,
  GBSF_STATUS_MISMATCH = 6,
  GBSF_STATUS_INTERNAL = 7,
  GBSF_STATUS_NULL_POINTER = 8,
  GBSF_STATUS_OUT_OF_RANGE = 9,
  GBSF_STATUS_PANIC = 10,
} GbsfStatus;

typedef enum {
  GBSF_ORDER_DEG_REV_LEX = 0,
  GBSF_ORDER_LEX = 1,
} GbsfOrder;

typedef enum {
  // Table of the squarefree part `J` of the initial ideal.
  GBSF_BETTI_METHOD_GHP = 0,
  GBSF_BETTI_METHOD_MURAI = 1,
  GBSF_BETTI_METHOD_MVT = 2,
} GbsfBettiMethod;

// Opaque reduced Gröbner basis.
typedef struct GbsfBasis GbsfBasis;

// Opaque graded Betti table.
typedef struct GbsfBetti GbsfBetti;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. The pointer is
// valid until the next failing call on the same thread.
const char *gbsf_last_error(void);

// Library version as a static string.
const char *gbsf_version(void);

// Frees a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void gbsf_string_free(char *s);

// Closed-form reduced Gröbner basis of `I_{n,k}`. `sigma` lists the
// variable ranking (largest first, 1-based) and may be null for the
// identity ranking.
//
// # Safety
// `sigma` must point to `sigma_len` values or be null; `out` must be valid.
GbsfStatus gbsf_basis_new(size_t n,
                          size_t k,
                          GbsfOrder order,
                          const size_t *sigma,
                          size_t sigma_len,
                          GbsfBasis **out);

// Number of generators, or 0 for a null handle.
//
// # Safety
// `basis` must be a live handle or null.
size_t gbsf_basis_len(const GbsfBasis *basis);

// Generator `index` as text, e.g. `x1*x2 + x1*x3`. Free with
// [`gbsf_string_free`].
//
// # Safety
// `basis` must be a live handle; `out` must be valid.
GbsfStatus gbsf_basis_generator(const GbsfBasis *basis, size_t index, char **out);

// # Safety
// `basis` must come from [`gbsf_basis_new`] and not have been freed.
void gbsf_basis_free(GbsfBasis *basis);

// Hilbert series coefficients of `R/I_{n,k}`, space separated.
//
// # Safety
// `out` must be valid.
GbsfStatus gbsf_hilbert_series(size_t n, size_t k, char **out);

// Number of distinct reduced Gröbner bases over all variable rankings, in
// decimal.
//
// # Safety
// `out` must be valid.
GbsfStatus gbsf_count_bases(size_t n, size_t k, char **out);

// Predicted WLP verdict for `R/I_{n,k}`.
//
// # Safety
// `out` must be valid.
GbsfStatus gbsf_classify_wlp(size_t n, size_t k, bool *out);

// Exact rank check of WLP. `holds` receives the computed verdict and
// `agrees` whether it matches the classification. Either may be null.
//
// # Safety
// Non-null out pointers must be valid.
GbsfStatus gbsf_verify_wlp(size_t n,
                           size_t k,
                           size_t trials,
                           uint64_t seed,
                           bool *holds,
                           bool *agrees);

// Graded Betti table of `in(I_{n,k})`, or of its squarefree part for
// [`GbsfBettiMethod::Ghp`].
//
// # Safety
// `out` must be valid.
GbsfStatus gbsf_betti_new(size_t n, size_t k, GbsfBettiMethod method, GbsfBetti **out);

// `β_{p,p+s}`: homological degree `p`, row `s`. 0 for a null handle.
//
// # Safety
// `table` must be a live handle or null.
uint64_t gbsf_betti_get(const GbsfBetti *table, size_t p, size_t s);

// Projective dimension and regularity. Both are 0 for an empty table.
//
// # Safety
// `table` must be a live handle; out pointers must be valid.
GbsfStatus gbsf_betti_pd_reg(const GbsfBetti *table, size_t *pd, size_t *reg);

// Betti diagram as text.
//
// # Safety
// `table` must be a live handle; `out` must be valid.
GbsfStatus gbsf_betti_to_string(const GbsfBetti *table, char **out);

// # Safety
// `table` must come from [`gbsf_betti_new`] and not have been freed.
void gbsf_betti_free(GbsfBetti *table);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GBSF_H */
