#ifndef SCHUBERT_H
#define SCHUBERT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible function.
typedef enum SchubertStatus {
  SCHUBERT_STATUS_OK = 0,
  SCHUBERT_STATUS_NULL_POINTER = 1,
  SCHUBERT_STATUS_INVALID_UTF8 = 2,
  SCHUBERT_STATUS_INVALID_PERMUTATION = 3,
  SCHUBERT_STATUS_SIZE_MISMATCH = 4,
  SCHUBERT_STATUS_NOT_BRUHAT_LEQ = 5,
  SCHUBERT_STATUS_OVERFLOW = 6,
  SCHUBERT_STATUS_INVALID_ARGUMENT = 7,
  SCHUBERT_STATUS_PANIC = 8,
} SchubertStatus;

// Route used by [`schubert_polynomial`].
typedef enum SchubertPolyMethod {
  SCHUBERT_POLY_METHOD_RC_GRAPH = 0,
  SCHUBERT_POLY_METHOD_CHAIN = 1,
} SchubertPolyMethod;

// Route used by [`schubert_skew`].
typedef enum SchubertSkewMethod {
  SCHUBERT_SKEW_METHOD_NORMAL_FORM = 0,
  SCHUBERT_SKEW_METHOD_CHAINS = 1,
  SCHUBERT_SKEW_METHOD_LR = 2,
} SchubertSkewMethod;

// Opaque handle to a linear combination of Schubert classes.
typedef struct SchubertExpansion SchubertExpansion;

// Opaque permutation handle.
typedef struct SchubertPermutation SchubertPermutation;

// Opaque polynomial handle.
typedef struct SchubertPolynomial SchubertPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. The pointer
// stays valid until the next call into this library on the same thread.
const char *schubert_last_error_message(void);

// Frees a string returned by this library.
//
// # Safety
// `s` must be null or a string returned by this library.
void schubert_string_free(char *s);

// Parses a permutation in one-line notation, e.g. `"2413"` or `"10,2,…"`.
//
// # Safety
// `text` must be a valid C string and `out` writable.
enum SchubertStatus schubert_perm_parse(const char *text, struct SchubertPermutation **out);

// # Safety
// `p` must be null or a handle from [`schubert_perm_parse`].
void schubert_perm_free(struct SchubertPermutation *p);

// Number of inversions.
//
// # Safety
// `p` must be a live handle and `out` writable.
enum SchubertStatus schubert_perm_length(const struct SchubertPermutation *p, size_t *out);

// Size `n` of the permutation, or 0 for a null handle.
//
// # Safety
// `p` must be null or a live handle.
size_t schubert_perm_size(const struct SchubertPermutation *p);

// One-line notation; free with [`schubert_string_free`]. Null on a null handle.
//
// # Safety
// `p` must be null or a live handle.
char *schubert_perm_to_string(const struct SchubertPermutation *p);

// The Schubert polynomial of `w` in `S_n` (`n = 0` uses the size of `w`).
//
// # Safety
// `w` must be a live handle and `out` writable.
enum SchubertStatus schubert_polynomial(const struct SchubertPermutation *w,
                                        size_t n,
                                        enum SchubertPolyMethod method,
                                        struct SchubertPolynomial **out);

// The skew Schubert polynomial `S_{w/u}` (`n = 0` uses the larger size).
//
// # Safety
// `w` and `u` must be live handles and `out` writable.
enum SchubertStatus schubert_skew(const struct SchubertPermutation *w,
                                  const struct SchubertPermutation *u,
                                  size_t n,
                                  enum SchubertSkewMethod method,
                                  struct SchubertPolynomial **out);

// # Safety
// `p` must be null or a polynomial handle from this library.
void schubert_poly_free(struct SchubertPolynomial *p);

// Number of nonzero terms, or 0 for a null handle.
//
// # Safety
// `p` must be null or a live handle.
size_t schubert_poly_num_terms(const struct SchubertPolynomial *p);

// Text form such as `x1^2*x2 + x1*x2^2`. Null on a null handle.
//
// # Safety
// `p` must be null or a live handle.
char *schubert_poly_to_string(const struct SchubertPolynomial *p);

// JSON list of `{"exp": [...], "coef": c}` terms. Null on a null handle.
//
// # Safety
// `p` must be null or a live handle.
char *schubert_poly_to_json(const struct SchubertPolynomial *p);

// Coefficient of `x^exps`, where `exps` holds `len` exponents.
//
// # Safety
// `p` must be a live handle, `exps` must point to `len` values (or be null
// with `len == 0`) and `out` writable.
enum SchubertStatus schubert_poly_coefficient(const struct SchubertPolynomial *p,
                                              const uint32_t *exps,
                                              size_t len,
                                              int64_t *out);

// The coefficients `c^w_{u,v}` of `S_u · S_v` in `S_n` (`n = 0` uses the
// larger size).
//
// # Safety
// `u` and `v` must be live handles and `out` writable.
enum SchubertStatus schubert_lr(const struct SchubertPermutation *u,
                                const struct SchubertPermutation *v,
                                size_t n,
                                struct SchubertExpansion **out);

// Expands a polynomial in the Schubert basis of its ambient `S_n`.
//
// # Safety
// `p` must be a live handle and `out` writable.
enum SchubertStatus schubert_poly_expand(const struct SchubertPolynomial *p,
                                         struct SchubertExpansion **out);

// # Safety
// `e` must be null or an expansion handle from this library.
void schubert_expansion_free(struct SchubertExpansion *e);

// Number of nonzero terms, or 0 for a null handle.
//
// # Safety
// `e` must be null or a live handle.
size_t schubert_expansion_len(const struct SchubertExpansion *e);

// Coefficient of the class of `w`.
//
// # Safety
// `e` and `w` must be live handles and `out` writable.
enum SchubertStatus schubert_expansion_coefficient(const struct SchubertExpansion *e,
                                                   const struct SchubertPermutation *w,
                                                   int64_t *out);

// JSON object mapping permutations to coefficients. Null on a null handle.
//
// # Safety
// `e` must be null or a live handle.
char *schubert_expansion_to_json(const struct SchubertExpansion *e);

// Number of rc-graphs of `w` in `S_n` (`n = 0` uses the size of `w`).
//
// # Safety
// `w` must be a live handle and `out` writable.
enum SchubertStatus schubert_rcgraph_count(const struct SchubertPermutation *w,
                                           size_t n,
                                           size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCHUBERT_H */
