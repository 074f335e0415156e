#ifndef QLATTICE_H
#define QLATTICE_H

/* This header is generated by cbindgen from qlattice-ffi; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible entry point.
typedef enum QlStatus {
  QL_STATUS_OK = 0,
  // A required pointer argument was null.
  QL_STATUS_NULL_POINTER = 1,
  // Arguments violate a documented precondition (non-prime order,
  // dimension too small, unknown name, ...).
  QL_STATUS_INVALID_ARGUMENT = 2,
  // The requested computation exceeds the step budget.
  QL_STATUS_BUDGET_EXCEEDED = 3,
  // Text input failed to parse.
  QL_STATUS_PARSE_ERROR = 4,
  // Input bytes were not valid UTF-8.
  QL_STATUS_UTF8_ERROR = 5,
  // An internal arithmetic invariant failed; report this as a bug.
  QL_STATUS_INTERNAL_ERROR = 6,
} QlStatus;

// Which matrix of an incidence pair to take.
typedef enum QlMatrixKind {
  QL_MATRIX_KIND_INCIDENCE = 0,
  QL_MATRIX_KIND_COMPLEMENT = 1,
} QlMatrixKind;

// Opaque finite-field context handle.
typedef struct QlField QlField;

// Opaque incidence-pair handle.
typedef struct QlIncidence QlIncidence;

// Opaque exact integer matrix handle.
typedef struct QlMatrix QlMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds the field of order p^k. On success writes a handle the caller
// must release with `ql_field_free`.
//
// # Safety
// `out` must be a valid pointer.
enum QlStatus ql_field_new(uint64_t p, uint32_t k, struct QlField **out);

// Builds the field of the given order, which must be a prime power.
//
// # Safety
// `out` must be a valid pointer.
enum QlStatus ql_field_from_order(uint64_t q, struct QlField **out);

// The order of the field, or 0 for a null handle.
//
// # Safety
// `field` must be null or a live handle from `ql_field_new`.
uint64_t ql_field_order(const struct QlField *field);

// Releases a field handle.
//
// # Safety
// `field` must be null or a live handle; it must not be used afterwards.
void ql_field_free(struct QlField *field);

// Builds the incidence pair for dimension `n >= 2` over the given field.
//
// # Safety
// `field` must be a live handle and `out` a valid pointer.
enum QlStatus ql_incidence_build(uint32_t n, const struct QlField *field, struct QlIncidence **out);

// Number of points indexing the incidence matrices, or 0 for null.
//
// # Safety
// `inc` must be null or a live handle.
uint64_t ql_incidence_point_count(const struct QlIncidence *inc);

// Copies one of the pair's matrices into a fresh matrix handle.
//
// # Safety
// `inc` must be a live handle and `out` a valid pointer.
enum QlStatus ql_incidence_matrix(const struct QlIncidence *inc,
                                  enum QlMatrixKind kind,
                                  struct QlMatrix **out);

// Releases an incidence handle.
//
// # Safety
// `inc` must be null or a live handle; it must not be used afterwards.
void ql_incidence_free(struct QlIncidence *inc);

// Parses a matrix from the text exchange format (first line the dimension,
// then one line per row).
//
// # Safety
// `text` must be a valid NUL-terminated string and `out` a valid pointer.
enum QlStatus ql_matrix_from_text(const char *text, struct QlMatrix **out);

// Serializes a matrix to the text exchange format.
//
// # Safety
// `matrix` must be a live handle and `out` a valid pointer.
enum QlStatus ql_matrix_to_text(const struct QlMatrix *matrix, char **out);

// The dimension of a matrix handle, or 0 for null.
//
// # Safety
// `matrix` must be null or a live handle.
uint64_t ql_matrix_dim(const struct QlMatrix *matrix);

// Signed determinant by fraction-free elimination, as a decimal string.
//
// # Safety
// `matrix` must be a live handle and `out` a valid pointer.
enum QlStatus ql_matrix_det_exact(const struct QlMatrix *matrix, char **out);

// Signed determinant by the multi-modular engine, as a decimal string.
// Always equal to `ql_matrix_det_exact`; exposed so bindings can check.
//
// # Safety
// `matrix` must be a live handle and `out` a valid pointer.
enum QlStatus ql_matrix_det_modular(const struct QlMatrix *matrix, char **out);

// Releases a matrix handle.
//
// # Safety
// `matrix` must be null or a live handle; it must not be used afterwards.
void ql_matrix_free(struct QlMatrix *matrix);

// The Gaussian binomial coefficient as a decimal string.
//
// # Safety
// `out` must be a valid pointer.
enum QlStatus ql_q_binom(int64_t n, int64_t j, uint64_t q, char **out);

// Closed form of |det A| as a decimal string.
//
// # Safety
// `out` must be a valid pointer.
enum QlStatus ql_det_a_closed(uint32_t n, uint64_t q, char **out);

// Closed form of |det B| as a decimal string.
//
// # Safety
// `out` must be a valid pointer.
enum QlStatus ql_det_b_closed(uint32_t n, uint64_t q, char **out);

// The basis-set text dump (one 1-based index tuple per line).
//
// # Safety
// `field` must be a live handle and `out` a valid pointer.
enum QlStatus ql_basis_set_text(uint32_t n,
                                const struct QlField *field,
                                uint64_t budget,
                                char **out);

// Runs a verification suite ("all", "incidence", "gorenstein", or
// "counting") and returns the JSON report.
//
// # Safety
// `suite` must be a valid NUL-terminated string and `out` a valid pointer.
enum QlStatus ql_verify_json(uint32_t n,
                             uint64_t q,
                             const char *suite,
                             uint64_t budget,
                             char **out);

// Renders the determinant table for `n_min..=n_max` in the given format
// ("text", "csv", or "json").
//
// # Safety
// `format` must be a valid NUL-terminated string and `out` a valid pointer.
enum QlStatus ql_table_render(uint64_t q,
                              uint32_t n_min,
                              uint32_t n_max,
                              const char *format,
                              uint64_t budget,
                              char **out);

// Releases a string returned by any `ql_*` function.
//
// # Safety
// `s` must be null or a string previously returned by this library; it
// must not be used afterwards.
void ql_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QLATTICE_H */
