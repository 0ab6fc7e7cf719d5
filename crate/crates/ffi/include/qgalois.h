#ifndef QGALOIS_H
#define QGALOIS_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum QgStatus {
  QG_STATUS_OK = 0,
  QG_STATUS_NULL_POINTER = 1,
  QG_STATUS_INVALID_UTF8 = 2,
  QG_STATUS_PARSE_ERROR = 3,
  QG_STATUS_INVALID_ORDER = 4,
  QG_STATUS_ORDER_MISMATCH = 5,
  QG_STATUS_NOT_DEGREE_ZERO = 6,
  QG_STATUS_DEGREE_OUT_OF_RANGE = 7,
  QG_STATUS_ALGEBRA_ERROR = 8,
  QG_STATUS_VERIFY_FAILED = 9,
  QG_STATUS_PANIC = 10,
} QgStatus;

/**
 * Opaque handle to an element of the reduced quantum plane.
 */
typedef struct QgElement QgElement;

/**
 * Parses and evaluates `expr` in the plane of order `order`.
 *
 * # Safety
 * `expr` must be a NUL-terminated string and `out` a valid pointer. On success
 * `*out` owns a new element that must be released with [`qg_element_free`].
 */
enum QgStatus qg_parse(size_t order, const char *expr, struct QgElement **out);

/**
 * Releases an element. Null is ignored.
 *
 * # Safety
 * `e` must come from this library and must not be used afterwards.
 */
void qg_element_free(struct QgElement *e);

/**
 * Order `N` of the element's plane, or 0 for null.
 *
 * # Safety
 * `e` must be null or a live element.
 */
size_t qg_order(const struct QgElement *e);

/**
 * `*out = a + b`.
 *
 * # Safety
 * `a` and `b` must be live elements and `out` a valid pointer.
 */
enum QgStatus qg_add(const struct QgElement *a, const struct QgElement *b, struct QgElement **out);

/**
 * `*out = a - b`.
 *
 * # Safety
 * `a` and `b` must be live elements and `out` a valid pointer.
 */
enum QgStatus qg_sub(const struct QgElement *a, const struct QgElement *b, struct QgElement **out);

/**
 * `*out = a b`.
 *
 * # Safety
 * `a` and `b` must be live elements and `out` a valid pointer.
 */
enum QgStatus qg_mul(const struct QgElement *a, const struct QgElement *b, struct QgElement **out);

/**
 * `*out = d(a)`.
 *
 * # Safety
 * `a` must be a live element and `out` a valid pointer.
 */
enum QgStatus qg_differential(const struct QgElement *a, struct QgElement **out);

/**
 * `*out = ∂(a)` for a degree-zero `a`.
 *
 * # Safety
 * `a` must be a live element and `out` a valid pointer.
 */
enum QgStatus qg_partial(const struct QgElement *a, struct QgElement **out);

/**
 * Writes whether `a` is zero.
 *
 * # Safety
 * `a` must be a live element and `out` a valid pointer.
 */
enum QgStatus qg_is_zero(const struct QgElement *a, bool *out);

/**
 * Writes whether `a == b`. Elements of different orders are an error.
 *
 * # Safety
 * `a` and `b` must be live elements and `out` a valid pointer.
 */
enum QgStatus qg_equal(const struct QgElement *a, const struct QgElement *b, bool *out);

/**
 * Normal form of `a` as text, e.g. `(1+q)x`. Null for a null handle.
 *
 * # Safety
 * `a` must be null or a live element. Free the result with [`qg_string_free`].
 */
char *qg_to_string(const struct QgElement *a);

/**
 * Normal form of `a` as JSON. Null for a null handle.
 *
 * # Safety
 * `a` must be null or a live element. Free the result with [`qg_string_free`].
 */
char *qg_to_json(const struct QgElement *a);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from [`qg_to_string`] or [`qg_to_json`] and not be used again.
 */
void qg_string_free(char *s);

/**
 * Runs the identity battery at one order. `*pass` is set even when some rows fail,
 * in which case the status is `VerifyFailed` and the last error names them.
 *
 * # Safety
 * `pass` must be a valid pointer.
 */
enum QgStatus qg_verify(size_t order, uint64_t seed, size_t cases, bool *pass);

/**
 * Message for the last failure on this thread, or null. The pointer stays valid
 * until the next call into the library on the same thread.
 */
const char *qg_last_error(void);

#endif  /* QGALOIS_H */
