#ifndef LIESYMP_H
#define LIESYMP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. Zero is success.
 */
typedef enum LsStatus {
  LS_STATUS_OK = 0,
  LS_STATUS_NULL_ARGUMENT = 1,
  LS_STATUS_INVALID_UTF8 = 2,
  /**
   * The structure-constant text could not be parsed.
   */
  LS_STATUS_PARSE_ERROR = 3,
  /**
   * Parsed, but not a Lie algebra (Jacobi, nilpotency, torus checks).
   */
  LS_STATUS_INVALID_ALGEBRA = 4,
  LS_STATUS_UNKNOWN_ENTRY = 5,
  LS_STATUS_INVALID_PARAMETER = 6,
  /**
   * No witness inside the configured search box.
   */
  LS_STATUS_WITNESS_BOUND = 7,
  /**
   * A bug; the message says where.
   */
  LS_STATUS_INTERNAL = 8,
} LsStatus;

typedef enum LsExistence {
  LS_EXISTENCE_YES = 0,
  LS_EXISTENCE_NO = 1,
  LS_EXISTENCE_ODD_DIMENSION = 2,
} LsExistence;

typedef struct LsAlgebra LsAlgebra;

typedef struct LsVerdict LsVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread. Empty if none. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *ls_last_error(void);

/**
 * Parses an algebra from the text format, checking Jacobi and the torus.
 *
 * # Safety
 * `source` must be a NUL-terminated string and `out` a valid pointer.
 */
enum LsStatus ls_algebra_parse(const char *source, struct LsAlgebra **out);

/**
 * Builds a catalog entry (`n4_1`, `L4`, `Q5`, `abelian3`, ...). `a` is an
 * optional rational such as `"3/2"` for rows with a parameter; pass NULL
 * for the default.
 *
 * # Safety
 * `name` must be a NUL-terminated string, `a` NULL or NUL-terminated, and
 * `out` a valid pointer.
 */
enum LsStatus ls_algebra_from_catalog(const char *name, const char *a, struct LsAlgebra **out);

/**
 * Dimension of the algebra, or 0 for NULL.
 *
 * # Safety
 * `algebra` must be NULL or a live handle.
 */
size_t ls_algebra_dim(const struct LsAlgebra *algebra);

/**
 * # Safety
 * `algebra` must be NULL or a handle not yet freed.
 */
void ls_algebra_free(struct LsAlgebra *algebra);

/**
 * Decides symplectic and exact symplectic existence.
 *
 * # Safety
 * `algebra` must be a live handle and `out` a valid pointer.
 */
enum LsStatus ls_decide_symplectic(const struct LsAlgebra *algebra, struct LsVerdict **out);

/**
 * # Safety
 * `verdict` must be a live handle and `out` a valid pointer.
 */
enum LsStatus ls_verdict_existence(const struct LsVerdict *verdict, enum LsExistence *out);

/**
 * Whether an exact symplectic form `dα` exists.
 *
 * # Safety
 * `verdict` must be a live handle and `out` a valid pointer.
 */
enum LsStatus ls_verdict_exact(const struct LsVerdict *verdict, bool *out);

/**
 * Dimension of the space of closed 2-forms.
 *
 * # Safety
 * `verdict` must be a live handle and `out` a valid pointer.
 */
enum LsStatus ls_verdict_z2_dim(const struct LsVerdict *verdict, size_t *out);

/**
 * The full report as JSON, in the same schema as `liesymp symplectic
 * --json`. Release with [`ls_string_free`].
 *
 * # Safety
 * `verdict` must be a live handle and `out` a valid pointer.
 */
enum LsStatus ls_verdict_json(const struct LsVerdict *verdict, char **out);

/**
 * # Safety
 * `verdict` must be NULL or a handle not yet freed.
 */
void ls_verdict_free(struct LsVerdict *verdict);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void ls_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LIESYMP_H */
