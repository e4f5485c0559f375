#ifndef CEVIAN_H
#define CEVIAN_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CevianStatus {
  CEVIAN_STATUS_OK = 0,
  /**
   * The document was produced but at least one check failed.
   */
  CEVIAN_STATUS_CHECK_FAILED = 1,
  CEVIAN_STATUS_NULL_POINTER = 2,
  CEVIAN_STATUS_INVALID_UTF8 = 3,
  CEVIAN_STATUS_PARSE = 4,
  CEVIAN_STATUS_DEGENERATE_TRIANGLE = 5,
  CEVIAN_STATUS_ARITHMETIC = 6,
  CEVIAN_STATUS_IO = 7,
  CEVIAN_STATUS_INTERNAL = 8,
} CevianStatus;

typedef enum CevianSuite {
  CEVIAN_SUITE_CLASSICAL = 0,
  CEVIAN_SUITE_XI_SUITE = 1,
  CEVIAN_SUITE_IDENTITIES = 2,
} CevianSuite;

/**
 * Opaque triangle handle.
 */
typedef struct CevianTriangle CevianTriangle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses `"Ax,Ay;Bx,By;Cx,Cy"` into a new handle stored in `*out`.
 *
 * # Safety
 * `text` must be a valid C string and `out` a valid pointer.
 */
enum CevianStatus cevian_triangle_new(const char *text, struct CevianTriangle **out);

/**
 * The 3-4-5 right triangle A=(0,3), B=(0,0), C=(4,0).
 */
struct CevianTriangle *cevian_triangle_new_345(void);

/**
 * # Safety
 * `t` must come from this library and not be freed twice. Null is ignored.
 */
void cevian_triangle_free(struct CevianTriangle *t);

/**
 * Classifies one triple `"rho,sigma,tau"`; JSON report in `*out_json`.
 *
 * # Safety
 * `triple` must be a valid C string and `out_json` a valid pointer.
 */
enum CevianStatus cevian_classify(const char *triple, char **out_json);

/**
 * Runs one suite. Returns `CEVIAN_STATUS_CHECK_FAILED` (with the document
 * still written) when any check fails.
 *
 * # Safety
 * `t` must be a live handle, `xi` a valid C string, `out_json` a valid pointer.
 */
enum CevianStatus cevian_verify(const struct CevianTriangle *t,
                                const char *xi,
                                enum CevianSuite suite,
                                char **out_json);

/**
 * Full report: the four ξ = 1/2 triples, every suite, Ceva intersections.
 *
 * # Safety
 * `t` must be a live handle and `out_json` a valid pointer.
 */
enum CevianStatus cevian_report(const struct CevianTriangle *t, char **out_json);

/**
 * # Safety
 * `s` must come from this library and not be freed twice. Null is ignored.
 */
void cevian_string_free(char *s);

/**
 * Message for the last failure on this thread, or null. Valid until the
 * next call into the library from the same thread.
 */
const char *cevian_last_error(void);

/**
 * Library version as a static C string.
 */
const char *cevian_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CEVIAN_H */
