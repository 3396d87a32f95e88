#ifndef VERMA_H
#define VERMA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum VermaStatus {
  VERMA_STATUS_OK = 0,
  VERMA_STATUS_NULL_POINTER = 1,
  VERMA_STATUS_INVALID_UTF8 = 2,
  VERMA_STATUS_INVALID_ARGUMENT = 3,
  VERMA_STATUS_VERIFICATION_FAILED = 4,
  VERMA_STATUS_INTERNAL = 5,
} VermaStatus;

/**
 * An algebra `g(G, λ)`.
 */
typedef struct VermaAlgebra VermaAlgebra;

/**
 * A weight on `g_0`, tied to the algebra it was built for.
 */
typedef struct VermaWeight VermaWeight;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Text of the last error on this thread; empty after a successful call.
 * The pointer stays valid until the next call on the same thread.
 */
const char *verma_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void verma_string_free(char *s);

/**
 * Builds an algebra from a λ string (`"1"`, `"-1/2"`, `"generic"`) and an
 * optional group JSON (`NULL` means `G = Z`).
 *
 * # Safety
 * String arguments must be NUL-terminated; `out` must be writable.
 */
enum VermaStatus verma_algebra_new(const char *lambda,
                                   const char *group_json,
                                   struct VermaAlgebra **out);

/**
 * # Safety
 * `alg` must come from [`verma_algebra_new`] or be null.
 */
void verma_algebra_free(struct VermaAlgebra *alg);

/**
 * Bracket of two generators written as `L(2)`, `I(-1)`, `CL`, `CLI1`.
 *
 * # Safety
 * `alg` must be a live handle; strings NUL-terminated; `out` writable.
 */
enum VermaStatus verma_bracket(const struct VermaAlgebra *alg,
                               const char *x,
                               const char *y,
                               char **out);

/**
 * Builds a weight from a JSON map of slot values (`{"I0": "1"}`); unlisted
 * slots stay symbolic. `NULL` gives the fully symbolic weight.
 *
 * # Safety
 * `alg` must be a live handle; `weight_json` NUL-terminated or null; `out`
 * writable.
 */
enum VermaStatus verma_weight_new(const struct VermaAlgebra *alg,
                                  const char *weight_json,
                                  struct VermaWeight **out);

/**
 * # Safety
 * `w` must come from [`verma_weight_new`] or be null.
 */
void verma_weight_free(struct VermaWeight *w);

/**
 * Determinant of the grade-`grade` Gram matrix of the rank-one module.
 * `brute` selects elimination instead of the diagonal product.
 *
 * # Safety
 * `w` must be a live handle; `out` writable.
 */
enum VermaStatus verma_gram_det(const struct VermaWeight *w,
                                uint32_t grade,
                                bool brute,
                                char **out);

/**
 * Irreducibility decision as a JSON document with `verdict`, `witness` and
 * `trace`.
 *
 * # Safety
 * `w` must be a live handle; `out` writable.
 */
enum VermaStatus verma_decide(const struct VermaWeight *w, uint64_t bound, char **out);

/**
 * Runs a JSON job as the command-line tool would. The output document is
 * written to `out`; `exit_code` (if non-null) receives 0, 1 or 2. The
 * status is `InvalidArgument` for exit code 1 and `VerificationFailed` for
 * exit code 2.
 *
 * # Safety
 * `job_json` must be NUL-terminated; `out` writable.
 */
enum VermaStatus verma_run_job(const char *job_json, char **out, int32_t *exit_code);

/**
 * Builds the JSON job text for a command with default parameters; useful to
 * bindings that prefer structured construction.
 *
 * # Safety
 * Strings must be NUL-terminated (`group_json`, `weight_json` may be null);
 * `out` writable.
 */
enum VermaStatus verma_job_json(const char *command,
                                const char *lambda,
                                const char *group_json,
                                const char *weight_json,
                                uint32_t grade,
                                char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VERMA_H */
