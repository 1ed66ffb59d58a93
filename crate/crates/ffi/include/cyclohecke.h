#ifndef CYCLOHECKE_H
#define CYCLOHECKE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes; zero is success.
 */
typedef enum CycloStatus {
  CYCLO_STATUS_OK = 0,
  CYCLO_STATUS_NULL_POINTER = 1,
  CYCLO_STATUS_INVALID_UTF8 = 2,
  CYCLO_STATUS_SYNTAX = 3,
  CYCLO_STATUS_CONTEXT = 4,
  CYCLO_STATUS_DIMENSION = 5,
  CYCLO_STATUS_RANGE = 6,
  CYCLO_STATUS_UNSUPPORTED = 7,
  CYCLO_STATUS_GUARD = 8,
  CYCLO_STATUS_VERIFY_FAILED = 9,
  CYCLO_STATUS_OTHER = 10,
  CYCLO_STATUS_PANIC = 11,
} CycloStatus;

/**
 * An algebra in which expressions are evaluated: cyclotomic or affine.
 */
typedef struct CycloContext CycloContext;

/**
 * An element of the algebra of the context that produced it.
 */
typedef struct CycloElement CycloElement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *cyclo_last_error(void);

/**
 * Creates ℋ_u(r) with `m` parameters, or the affine algebra when `affine`
 * is nonzero.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum CycloStatus cyclo_context_new(uintptr_t m,
                                   uintptr_t r,
                                   int32_t affine,
                                   struct CycloContext **out);

/**
 * # Safety
 * `ctx` must be null or a handle from `cyclo_context_new` not yet freed.
 */
void cyclo_context_free(struct CycloContext *ctx);

/**
 * Parses and evaluates `src`, e.g. `"T1*L2 - (q-1)*L1"`.
 *
 * # Safety
 * `ctx` must be a live context, `src` a nul-terminated string, `out` writable.
 */
enum CycloStatus cyclo_eval(const struct CycloContext *ctx,
                            const char *src,
                            struct CycloElement **out);

/**
 * # Safety
 * `el` must be null or a handle returned by this library not yet freed.
 */
void cyclo_element_free(struct CycloElement *el);

/**
 * `a·b` in the algebra of `ctx`.
 *
 * # Safety
 * All handles must be live; `out` must be writable.
 */
enum CycloStatus cyclo_element_mul(const struct CycloContext *ctx,
                                   const struct CycloElement *a,
                                   const struct CycloElement *b,
                                   struct CycloElement **out);

/**
 * `a + b` in the algebra of `ctx`.
 *
 * # Safety
 * All handles must be live; `out` must be writable.
 */
enum CycloStatus cyclo_element_add(const struct CycloContext *ctx,
                                   const struct CycloElement *a,
                                   const struct CycloElement *b,
                                   struct CycloElement **out);

/**
 * Writes 1 to `out` when the normal forms coincide, else 0.
 *
 * # Safety
 * Both handles must be live; `out` must be writable.
 */
enum CycloStatus cyclo_element_equal(const struct CycloElement *a,
                                     const struct CycloElement *b,
                                     int32_t *out);

/**
 * Normal form in expression syntax; parse it back with `cyclo_eval`.
 *
 * # Safety
 * `el` must be live; the string written to `out` is freed with `cyclo_string_free`.
 */
enum CycloStatus cyclo_element_to_string(const struct CycloElement *el, char **out);

/**
 * Normal form as JSON `{m, r, terms: [{w, a, poly}]}`.
 *
 * # Safety
 * As for `cyclo_element_to_string`.
 */
enum CycloStatus cyclo_element_to_json(const struct CycloElement *el, char **out);

/**
 * Runs a verification suite and writes its JSON report. Returns
 * `VerifyFailed` (with the report still written) when a check fails.
 *
 * # Safety
 * `suite` must be a nul-terminated string and `out` writable.
 */
enum CycloStatus cyclo_verify(const char *suite,
                              uintptr_t m,
                              uintptr_t n,
                              uintptr_t r,
                              uint64_t seed,
                              char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void cyclo_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CYCLOHECKE_H */
