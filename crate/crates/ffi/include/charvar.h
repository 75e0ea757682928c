#ifndef CHARVAR_H
#define CHARVAR_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every entry point.
typedef enum CvStatus {
  CV_STATUS_OK = 0,
  CV_STATUS_NULL_POINTER = 1,
  CV_STATUS_INVALID_UTF8 = 2,
  CV_STATUS_PARSE = 3,
  CV_STATUS_INVALID_INPUT = 4,
  CV_STATUS_BUDGET_EXCEEDED = 5,
  CV_STATUS_DIMENSION = 6,
  CV_STATUS_INTERNAL = 7,
} CvStatus;

// Opaque polynomial handle.
typedef struct CvPolynomial CvPolynomial;

// Opaque verification report handle.
typedef struct CvReport CvReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. The pointer is
// valid until the next call into the library on the same thread.
const char *cv_last_error(void);

// Library version as a static string.
const char *cv_version(void);

// Trace polynomial of a word in the free group of rank 2. `copy` is 0 for
// plain coordinates `t1, t2, t12`, or 1 or 2 for copy-indexed ones.
//
// # Safety
// `word_text` must be a valid NUL-terminated string and `out` a valid pointer.
enum CvStatus cv_reduce_trace(const char *word_text, uint32_t copy, struct CvPolynomial **out);

// `Q₄` of two words as a polynomial in the copy-indexed coordinates.
//
// # Safety
// Both strings must be valid NUL-terminated strings and `out` a valid pointer.
enum CvStatus cv_q4(const char *w1, const char *w2, struct CvPolynomial **out);

// Parses a polynomial in the library's text format.
//
// # Safety
// `text` must be a valid NUL-terminated string and `out` a valid pointer.
enum CvStatus cv_polynomial_parse(const char *text, struct CvPolynomial **out);

// Renders a polynomial; free the result with [`cv_string_free`].
//
// # Safety
// `p` must be a live handle and `out` a valid pointer.
enum CvStatus cv_polynomial_to_string(const struct CvPolynomial *p, char **out);

// 1 if the polynomial is zero, 0 otherwise, -1 for a null handle.
//
// # Safety
// `p` must be null or a live handle.
int32_t cv_polynomial_is_zero(const struct CvPolynomial *p);

// 1 if the two polynomials are equal, 0 otherwise, -1 if either is null.
//
// # Safety
// Both arguments must be null or live handles.
int32_t cv_polynomial_equal(const struct CvPolynomial *a, const struct CvPolynomial *b);

// # Safety
// `p` must be null or a handle not yet freed.
void cv_polynomial_free(struct CvPolynomial *p);

// # Safety
// `s` must be null or a string returned by this library and not yet freed.
void cv_string_free(char *s);

// Davenport constant of `(ℤ/m)^n`. `budget` bounds the group order; 0
// selects the default.
//
// # Safety
// `out` must be a valid pointer.
enum CvStatus cv_davenport(uint32_t m, uint32_t n, uint64_t budget, uint64_t *out);

// Runs a verification suite by name (`all` included) with the given seed.
//
// # Safety
// `suite` must be a valid NUL-terminated string and `out` a valid pointer.
enum CvStatus cv_verify(const char *suite, uint64_t seed, struct CvReport **out);

// 1 if every item of the report passed, 0 otherwise, -1 for a null handle.
//
// # Safety
// `r` must be null or a live handle.
int32_t cv_report_ok(const struct CvReport *r);

// Number of items in the report, 0 for a null handle.
//
// # Safety
// `r` must be null or a live handle.
size_t cv_report_len(const struct CvReport *r);

// The report as JSON; free the result with [`cv_string_free`].
//
// # Safety
// `r` must be a live handle and `out` a valid pointer.
enum CvStatus cv_report_json(const struct CvReport *r, char **out);

// # Safety
// `r` must be null or a handle not yet freed.
void cv_report_free(struct CvReport *r);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* CHARVAR_H */
