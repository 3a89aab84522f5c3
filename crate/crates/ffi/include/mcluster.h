#ifndef MCLUSTER_H
#define MCLUSTER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum McqStatus {
  MCQ_STATUS_OK = 0,
  MCQ_STATUS_INVALID_ARGUMENT = 1,
  MCQ_STATUS_NULL_POINTER = 2,
  MCQ_STATUS_PARSE = 3,
  MCQ_STATUS_PROPERTY_FAILED = 4,
  MCQ_STATUS_INTERNAL = 5,
} McqStatus;

/**
 * Opaque translation quiver.
 */
typedef struct McqQuiver McqQuiver;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Quiver of m-diagonals of the `(nm+2)`-gon.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum McqStatus mcq_gamma_new(uint32_t n, uint32_t m, struct McqQuiver **out);

/**
 * `ZA_{n-1}` modulo `τ^{-1} S^m`.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum McqStatus mcq_ar_quiver_new(uint32_t n, uint32_t m, struct McqQuiver **out);

/**
 * Parse a JSON quiver document.
 *
 * # Safety
 * `json` must be null or a NUL-terminated string; `out` must be null or
 * valid for writes.
 */
enum McqStatus mcq_quiver_from_json(const char *json, struct McqQuiver **out);

/**
 * Serialize to a JSON document; free the result with [`mcq_string_free`].
 *
 * # Safety
 * `q` must be null or a live handle; `out` must be null or valid for writes.
 */
enum McqStatus mcq_quiver_to_json(const struct McqQuiver *q, char **out);

/**
 * # Safety
 * `q` must be null or a handle not yet freed.
 */
void mcq_quiver_free(struct McqQuiver *q);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void mcq_string_free(char *s);

/**
 * # Safety
 * `q` must be null or a live handle; `out` must be null or valid for writes.
 */
enum McqStatus mcq_quiver_vertex_count(const struct McqQuiver *q, size_t *out);

/**
 * Number of arrows counted with multiplicity.
 *
 * # Safety
 * `q` must be null or a live handle; `out` must be null or valid for writes.
 */
enum McqStatus mcq_quiver_arrow_count(const struct McqQuiver *q, uint32_t *out);

/**
 * The m-th power as a new handle.
 *
 * # Safety
 * `q` must be null or a live handle; `out` must be null or valid for writes.
 */
enum McqStatus mcq_quiver_power(const struct McqQuiver *q, uint32_t m, struct McqQuiver **out);

/**
 * `Ok` when the translation axiom holds, `PropertyFailed` with the first
 * violation otherwise.
 *
 * # Safety
 * `q` must be null or a live handle.
 */
enum McqStatus mcq_quiver_check(const struct McqQuiver *q);

/**
 * # Safety
 * `q` must be null or a live handle; `out` must be null or valid for writes.
 */
enum McqStatus mcq_quiver_is_stable(const struct McqQuiver *q, bool *out);

/**
 * Number of stable components; `PropertyFailed` if the quiver is not stable.
 *
 * # Safety
 * `q` must be null or a live handle; `out` must be null or valid for writes.
 */
enum McqStatus mcq_quiver_component_count(const struct McqQuiver *q, size_t *out);

/**
 * # Safety
 * `a` and `b` must be null or live handles; `out` must be null or valid for
 * writes.
 */
enum McqStatus mcq_quiver_isomorphic(const struct McqQuiver *a,
                                     const struct McqQuiver *b,
                                     bool *out);

/**
 * Number of facets of the m-divisible dissection complex.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum McqStatus mcq_facet_count(uint32_t n, uint32_t m, uint64_t *out);

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next call into the library on this thread.
 */
const char *mcq_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MCLUSTER_H */
