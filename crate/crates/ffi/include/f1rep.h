#ifndef F1REP_H
#define F1REP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes shared by every function.
 */
typedef enum F1Status {
  F1_STATUS_OK = 0,
  F1_STATUS_NULL_POINTER = 1,
  F1_STATUS_INVALID_UTF8 = 2,
  F1_STATUS_PARSE = 3,
  F1_STATUS_INVALID_INPUT = 4,
  F1_STATUS_CONTRACT_VIOLATION = 5,
  F1_STATUS_MISSING_TABLE = 6,
  F1_STATUS_PANIC = 7,
} F1Status;

/**
 * Opaque quiver handle.
 */
typedef struct F1Quiver F1Quiver;

/**
 * Opaque representation handle.
 */
typedef struct F1Rep F1Rep;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or NULL. Valid until the
 * next failing call on the same thread.
 */
const char *f1_last_error(void);

/**
 * Library version as a static string.
 */
const char *f1_version(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library that was not freed yet.
 */
void f1_string_free(char *s);

/**
 * Build a quiver from a built-in name (`L2`, `C3:++-`, `K2`, ...) or JSON
 * `{"vertices": n, "arrows": [[s, t], ...]}`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum F1Status f1_quiver_parse(const char *text, struct F1Quiver **out);

/**
 * # Safety
 * `q` must be NULL or a handle from [`f1_quiver_parse`] that was not freed yet.
 */
void f1_quiver_free(struct F1Quiver *q);

/**
 * # Safety
 * `q` must be a valid quiver handle and `vertices`, `arrows` valid pointers.
 */
enum F1Status f1_quiver_size(const struct F1Quiver *q, size_t *vertices, size_t *arrows);

/**
 * Number of nilpotent indecomposable classes of total dimension `n`.
 *
 * # Safety
 * `q` must be a valid quiver handle and `out` a valid pointer.
 */
enum F1Status f1_ni(const struct F1Quiver *q, size_t n, size_t *out);

/**
 * Parse a representation from JSON.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum F1Status f1_rep_parse(const char *json, struct F1Rep **out);

/**
 * The canonical representative of the class with hex key `key` over `q`.
 *
 * # Safety
 * `q` must be a valid quiver handle, `key` a NUL-terminated string and `out` a valid pointer.
 */
enum F1Status f1_rep_from_key(const struct F1Quiver *q, const char *key, struct F1Rep **out);

/**
 * # Safety
 * `r` must be NULL or a representation handle that was not freed yet.
 */
void f1_rep_free(struct F1Rep *r);

/**
 * # Safety
 * `r` must be a valid representation handle and `out` a valid pointer.
 */
enum F1Status f1_rep_total_dim(const struct F1Rep *r, size_t *out);

/**
 * Canonical key of the isomorphism class, as a hex string.
 *
 * # Safety
 * `r` must be a valid representation handle and `out` a valid pointer.
 */
enum F1Status f1_rep_key(const struct F1Rep *r, char **out);

/**
 * # Safety
 * `r` must be a valid representation handle and `out` a valid pointer.
 */
enum F1Status f1_rep_is_indecomposable(const struct F1Rep *r, bool *out);

/**
 * DOT text for the colored quiver of `r`.
 *
 * # Safety
 * `r` must be a valid representation handle and `out` a valid pointer.
 */
enum F1Status f1_rep_dot(const struct F1Rep *r, char **out);

/**
 * Hall product of two nilpotent classes, as JSON `{"<key>": "p/q", ...}`.
 *
 * # Safety
 * `x` and `y` must be valid representation handles and `out` a valid pointer.
 */
enum F1Status f1_hall_product(const struct F1Rep *x, const struct F1Rep *y, char **out);

/**
 * Run a named verification suite with its default parameters. Writes the
 * JSON report to `report` (may be NULL) and the overall verdict to `pass`.
 *
 * # Safety
 * `suite` must be a NUL-terminated string, `pass` a valid pointer and
 * `report` NULL or a valid pointer.
 */
enum F1Status f1_verify(const char *suite, bool *pass, char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* F1REP_H */
