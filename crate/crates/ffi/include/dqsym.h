#ifndef DQSYM_H
#define DQSYM_H

/* Generated by cbindgen from crates/ffi/src. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DqsymConvention {
  DQSYM_CONVENTION_PAPER_LITERAL = 0,
  DQSYM_CONVENTION_ORACLE_CONSISTENT = 1,
} DqsymConvention;

typedef enum DqsymStatus {
  DQSYM_STATUS_OK = 0,
  DQSYM_STATUS_NULL_POINTER = 1,
  DQSYM_STATUS_INVALID_COMPOSITION = 2,
  DQSYM_STATUS_TRUNCATION_TOO_SMALL = 3,
  DQSYM_STATUS_INDEX_OUT_OF_RANGE = 4,
  DQSYM_STATUS_INVALID_ARGUMENT = 5,
  DQSYM_STATUS_PANIC = 6,
} DqsymStatus;

// Opaque handle to an expansion `sum_gamma c_gamma M_gamma`, entries in
// length-then-lex order of `gamma`.
typedef struct DqsymExpansion DqsymExpansion;

// Opaque polynomial handle.
typedef struct DqsymPoly DqsymPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Human-readable description of a status code. The string is static.
const char *dqsym_status_message(enum DqsymStatus status);

// Copy of the last error message on this thread, or null. Free with
// `dqsym_string_free`.
char *dqsym_last_error(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void dqsym_string_free(char *s);

// Truncated `M_alpha(x, y)` in `x_1..x_{n_x}`, `y_1..y_{n_y}`.
//
// # Safety
// `alpha` must point to `alpha_len` readable values; `out` must be writable.
enum DqsymStatus dqsym_double_monomial(const uint32_t *alpha,
                                       size_t alpha_len,
                                       size_t n_x,
                                       uint32_t n_y,
                                       struct DqsymPoly **out);

// The structure coefficient `c^gamma_{alpha,beta}`.
//
// # Safety
// Each composition pointer must reference the stated number of values;
// `out` must be writable.
enum DqsymStatus dqsym_structure_coefficient(const uint32_t *alpha,
                                             size_t alpha_len,
                                             const uint32_t *beta,
                                             size_t beta_len,
                                             const uint32_t *gamma,
                                             size_t gamma_len,
                                             enum DqsymConvention convention,
                                             struct DqsymPoly **out);

// `M_alpha * M_beta` expanded in the `M` basis.
//
// # Safety
// As for `dqsym_structure_coefficient`.
enum DqsymStatus dqsym_product_expand(const uint32_t *alpha,
                                      size_t alpha_len,
                                      const uint32_t *beta,
                                      size_t beta_len,
                                      enum DqsymConvention convention,
                                      struct DqsymExpansion **out);

// Checks the product rule for `(alpha, beta)` against exact polynomial
// multiplication; writes the outcome to `passed`.
//
// # Safety
// As for `dqsym_structure_coefficient`; `passed` must be writable.
enum DqsymStatus dqsym_verify_expansion(const uint32_t *alpha,
                                        size_t alpha_len,
                                        const uint32_t *beta,
                                        size_t beta_len,
                                        enum DqsymConvention convention,
                                        bool *passed);

// Number of nonzero-weight tableaux of shape `c/a` and content `b`.
//
// # Safety
// `count` must be writable.
enum DqsymStatus dqsym_tableau_count(uint32_t c, uint32_t a, uint32_t b, size_t *count);

// # Safety
// `e` must be null or a live expansion handle.
size_t dqsym_expansion_len(const struct DqsymExpansion *e);

// Borrows the parts of the `index`-th `gamma`. The pointer stays valid
// until the expansion is freed.
//
// # Safety
// `e` must be a live expansion handle; `parts` and `len` must be writable.
enum DqsymStatus dqsym_expansion_gamma(const struct DqsymExpansion *e,
                                       size_t index,
                                       const uint32_t **parts,
                                       size_t *len);

// Copies the `index`-th coefficient into a new polynomial handle.
//
// # Safety
// `e` must be a live expansion handle; `out` must be writable.
enum DqsymStatus dqsym_expansion_coeff(const struct DqsymExpansion *e,
                                       size_t index,
                                       struct DqsymPoly **out);

// JSON array `[{gamma, coeff}, ...]`. Free with `dqsym_string_free`.
//
// # Safety
// `e` must be null or a live expansion handle.
char *dqsym_expansion_to_json(const struct DqsymExpansion *e);

// # Safety
// `e` must be null or a handle from this library, not yet freed.
void dqsym_expansion_free(struct DqsymExpansion *e);

// Canonical text form, e.g. `y1 + y2 - y4 - y5`.
//
// # Safety
// `p` must be null or a live polynomial handle.
char *dqsym_poly_to_string(const struct DqsymPoly *p);

// JSON term records `[{coeff, x, y}, ...]`.
//
// # Safety
// `p` must be null or a live polynomial handle.
char *dqsym_poly_to_json(const struct DqsymPoly *p);

// # Safety
// `p` must be null or a live polynomial handle.
bool dqsym_poly_is_zero(const struct DqsymPoly *p);

// Number of terms.
//
// # Safety
// `p` must be null or a live polynomial handle.
size_t dqsym_poly_term_count(const struct DqsymPoly *p);

// # Safety
// Both arguments must be null or live polynomial handles.
bool dqsym_poly_equal(const struct DqsymPoly *a, const struct DqsymPoly *b);

// # Safety
// `p` must be null or a handle from this library, not yet freed.
void dqsym_poly_free(struct DqsymPoly *p);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DQSYM_H */
