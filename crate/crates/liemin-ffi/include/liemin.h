#ifndef LIEMIN_H
#define LIEMIN_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every call.
 */
typedef enum LieminStatus {
  LieminStatus_Ok = 0,
  LieminStatus_NullPointer = 1,
  LieminStatus_InvalidUtf8 = 2,
  /**
   * Malformed input such as a bad type label or rational.
   */
  LieminStatus_Validation = 3,
  /**
   * Well-formed input violating a mathematical precondition.
   */
  LieminStatus_Precondition = 4,
  /**
   * An internal panic was caught at the boundary.
   */
  LieminStatus_Panic = 5,
} LieminStatus;

/**
 * An irreducible representation together with its trace form.
 */
typedef struct LieminRep LieminRep;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Build the representation with highest weight `pi` (`adjoint`,
 * `fund:…` or `eps:…`) of the algebra `type_label`.
 *
 * # Safety
 * `type_label` and `pi` must be NUL-terminated strings; `out` must be
 * writable.
 */
enum LieminStatus liemin_rep_new(const char *type_label, const char *pi, struct LieminRep **out);

/**
 * # Safety
 * `rep` must come from [`liemin_rep_new`] and not be used afterwards.
 */
void liemin_rep_free(struct LieminRep *rep);

/**
 * # Safety
 * `rep` must be a live handle and `out` writable.
 */
enum LieminStatus liemin_rep_dim(const struct LieminRep *rep, uint64_t *out);

/**
 * `q_{π,Θ}(x; λ)` in LaTeX. `theta` lists 1-based simple-root indices
 * separated by commas; `convention` is `psi` or `psi-prime`.
 *
 * # Safety
 * String arguments must be NUL-terminated, `rep` live and `out` writable.
 */
enum LieminStatus liemin_minpoly_latex(const struct LieminRep *rep,
                                       const char *theta,
                                       const char *convention,
                                       char **out);

/**
 * Gap certificate as JSON at the parameter values `lambda`
 * (comma-separated rationals, one per parameter).
 *
 * # Safety
 * String arguments must be NUL-terminated, `rep` live and `out` writable.
 */
enum LieminStatus liemin_certify_json(const struct LieminRep *rep,
                                      const char *theta,
                                      const char *convention,
                                      const char *lambda,
                                      char **out);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void liemin_string_free(char *s);

/**
 * Message for the last failed call on this thread; empty after success.
 * Valid until the next call on the same thread.
 */
const char *liemin_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LIEMIN_H */
