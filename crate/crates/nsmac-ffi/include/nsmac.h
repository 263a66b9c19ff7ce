#ifndef NSMAC_H
#define NSMAC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes mirrored by the generated header.
 */
typedef enum NsmacStatus {
  /**
   * Success.
   */
  NSMAC_STATUS_OK = 0,
  /**
   * Verification failed (a checked property does not hold).
   */
  NSMAC_STATUS_VERIFY_FAILED = 1,
  /**
   * Malformed input (parse or range error).
   */
  NSMAC_STATUS_BAD_INPUT = 2,
  /**
   * A denominator fell outside the product form.
   */
  NSMAC_STATUS_NOT_PRODUCT_FORM = 3,
  /**
   * The computation hit a resource guard.
   */
  NSMAC_STATUS_RESOURCE_LIMIT = 4,
  /**
   * The polynomial degenerates at the requested point.
   */
  NSMAC_STATUS_DEGENERATE = 5,
  /**
   * Null pointer or invalid handle.
   */
  NSMAC_STATUS_NULL_POINTER = 6,
  /**
   * Any other error.
   */
  NSMAC_STATUS_INTERNAL = 7,
} NsmacStatus;

/**
 * Opaque engine handle holding the polynomial memo and the last error.
 */
typedef struct NsmacEngine NsmacEngine;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates a fresh engine. Returns null on allocation failure.
 */
struct NsmacEngine *nsmac_engine_new(void);

/**
 * Releases an engine created by [`nsmac_engine_new`].
 *
 * # Safety
 * `engine` must be a pointer previously returned by [`nsmac_engine_new`]
 * that has not been freed.
 */
void nsmac_engine_free(struct NsmacEngine *engine);

/**
 * Releases a string returned through an out-parameter.
 *
 * # Safety
 * `s` must be a pointer previously written by this library.
 */
void nsmac_string_free(char *s);

/**
 * Message of the most recent error on this engine.
 *
 * The pointer stays valid until the next failing call on the same engine.
 *
 * # Safety
 * `engine` must be a valid engine handle.
 */
const char *nsmac_last_error(const struct NsmacEngine *engine);

/**
 * JSON rendering of M_v. `v` is a composition like `"1,0,2"` or `"102"`.
 *
 * # Safety
 * Pointers must be valid; see the crate conventions.
 */
enum NsmacStatus nsmac_mac_json(struct NsmacEngine *engine, const char *v, char **out);

/**
 * JSON rendering of the factored denominator Den(v).
 *
 * # Safety
 * Pointers must be valid; see the crate conventions.
 */
enum NsmacStatus nsmac_den_json(struct NsmacEngine *engine, const char *v, char **out);

/**
 * JSON with std(v) and both spectral vectors.
 *
 * # Safety
 * Pointers must be valid; see the crate conventions.
 */
enum NsmacStatus nsmac_spectre_json(struct NsmacEngine *engine, const char *v, char **out);

/**
 * Canonical path text `000 -Phi-> 001 -s2-> ...` from `0^N` to `v`.
 *
 * # Safety
 * Pointers must be valid; see the crate conventions.
 */
enum NsmacStatus nsmac_path_text(struct NsmacEngine *engine, const char *v, char **out);

/**
 * Pole-absence report for `staircase(k, a, n)` as JSON.
 *
 * `max_terms` guards the brute-force walk (0 means the default guard).
 *
 * # Safety
 * Pointers must be valid; see the crate conventions.
 */
enum NsmacStatus nsmac_staircase_verify_json(struct NsmacEngine *engine,
                                             int k,
                                             int a,
                                             int n,
                                             int max_terms,
                                             char **out);

/**
 * Specializes M_v at `q^a t^b = 1` with `omega = zeta_a^omega_pow` and
 * renders the result as text.
 *
 * # Safety
 * Pointers must be valid; see the crate conventions.
 */
enum NsmacStatus nsmac_specialize_text(struct NsmacEngine *engine,
                                       const char *v,
                                       int a,
                                       int b,
                                       int omega_pow,
                                       char **out);

/**
 * Checks a declarative identity (same format as the CLI identity files).
 * Writes `"true"` or `"false"`.
 *
 * # Safety
 * Pointers must be valid; see the crate conventions.
 */
enum NsmacStatus nsmac_check_identity(struct NsmacEngine *engine,
                                      const char *identity_text,
                                      char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* NSMAC_H */
