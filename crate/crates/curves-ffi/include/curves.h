#ifndef CURVES_H
#define CURVES_H

/* Generated by cbindgen from the curves-ffi crate; edits will be overwritten. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible call in this interface.
 */
typedef enum CurvesStatus {
  /**
   * The call succeeded.
   */
  CurvesStatus_Ok = 0,
  /**
   * A required pointer argument was NULL.
   */
  CurvesStatus_NullArgument = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  CurvesStatus_InvalidUtf8 = 2,
  /**
   * A curve code failed to parse.
   */
  CurvesStatus_ParseError = 3,
  /**
   * An argument was outside the supported range.
   */
  CurvesStatus_DomainError = 4,
  /**
   * The engine failed an internal consistency check.
   */
  CurvesStatus_InternalError = 5,
} CurvesStatus;

/**
 * A fixed collection of curves on the closed genus-3 surface.
 */
typedef struct CurvesSystem CurvesSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds the standard 33-curve system. Returns NULL only if construction
 * fails; release the handle with [`curves_system_free`].
 */
struct CurvesSystem *curves_system_new(void);

/**
 * Releases a system handle. NULL is a no-op.
 *
 * # Safety
 * `sys` must be NULL or an unreleased pointer from [`curves_system_new`].
 */
void curves_system_free(struct CurvesSystem *sys);

/**
 * Number of curves in the system; 0 for NULL.
 *
 * # Safety
 * `sys` must be NULL or a live handle.
 */
size_t curves_system_len(const struct CurvesSystem *sys);

/**
 * Writes the code of curve `index` into `buf` as a NUL-terminated string.
 * Fails with `DomainError` when the index is out of range or `cap` cannot
 * hold the text plus terminator.
 *
 * # Safety
 * `sys` must be a live handle and `buf` must point to `cap` writable bytes.
 */
enum CurvesStatus curves_system_code(const struct CurvesSystem *sys,
                                     size_t index,
                                     char *buf,
                                     size_t cap);

/**
 * Geometric intersection number of two curve codes, computed by both
 * engines and cross-checked.
 *
 * # Safety
 * `a` and `b` must be NUL-terminated strings and `out` must be writable.
 */
enum CurvesStatus curves_intersection(const char *a, const char *b, uint32_t *out);

/**
 * Checks every pair in the system with both engines and writes the largest
 * pairwise intersection number to `out_max`. `Ok` means the check ran;
 * the system is a 1-system exactly when `*out_max <= 1`.
 *
 * # Safety
 * `sys` must be a live handle and `out_max` must be writable.
 */
enum CurvesStatus curves_verify_1system(const struct CurvesSystem *sys, uint32_t *out_max);

/**
 * Runs the saturation check over the twist window `[-radius, radius + 1]`
 * and writes the number of admissible non-members to `out_admissible`.
 * `Ok` with 0 admissible means no curve can be added to the system. Needs
 * `radius >= 2` for the window tail argument; smaller radii fail with
 * `DomainError`.
 *
 * # Safety
 * `sys` must be a live handle and `out_admissible` must be writable.
 */
enum CurvesStatus curves_saturation(const struct CurvesSystem *sys,
                                    int32_t radius,
                                    size_t *out_admissible);

/**
 * Static description of a status code. Never NULL.
 */
const char *curves_status_message(enum CurvesStatus status);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* CURVES_H */
