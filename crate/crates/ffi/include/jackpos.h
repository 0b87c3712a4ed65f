#ifndef JACKPOS_H
#define JACKPOS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum JpStatus {
  JP_STATUS_OK = 0,
  JP_STATUS_COUNTEREXAMPLE = 1,
  JP_STATUS_INVALID_INPUT = 2,
  JP_STATUS_UNSUPPORTED_RANGE = 3,
  JP_STATUS_IO = 4,
  JP_STATUS_NULL_POINTER = 5,
  JP_STATUS_INTERNAL = 6,
} JpStatus;

typedef enum JpCone {
  JP_CONE_ZERO = 0,
  JP_CONE_POSITIVE = 1,
  JP_CONE_NON_MEMBER = 2,
} JpCone;

// Opaque element of `Q(t)`.
typedef struct JpRatFun JpRatFun;

// Opaque symmetric polynomial.
typedef struct JpSymPoly JpSymPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failure on this thread, or null. The pointer stays
// valid until the next failing call on the same thread.
const char *jp_last_error(void);

// Generalized binomial coefficient `binom(lambda, mu)` in `n` variables.
// Partitions are comma-separated parts, e.g. `"3,1"`.
//
// # Safety
// String arguments must be valid NUL-terminated strings; `out` must be writable.
enum JpStatus jp_binomial(const char *lambda, const char *mu, size_t n, struct JpRatFun **out);

// Parses a rational function such as `"(2*t+2)/(t+2)"`.
//
// # Safety
// `s` must be a valid NUL-terminated string; `out` must be writable.
enum JpStatus jp_ratfun_parse(const char *s, struct JpRatFun **out);

// Canonical text form. Release with `jp_string_free`.
//
// # Safety
// `f` must be a live handle or null.
char *jp_ratfun_to_string(const struct JpRatFun *f);

// Decides membership in the positivity cone.
//
// # Safety
// `f` must be a live handle; `out` must be writable.
enum JpStatus jp_cone_member(const struct JpRatFun *f, enum JpCone *out);

// # Safety
// `f` must be a handle from this library or null; it is invalid afterwards.
void jp_ratfun_free(struct JpRatFun *f);

// Monic Jack polynomial `P_shape` in `n` variables, monomial basis.
//
// # Safety
// `shape` must be a valid NUL-terminated string; `out` must be writable.
enum JpStatus jp_jack(const char *shape, size_t n, struct JpSymPoly **out);

// Schur polynomial in `n` variables, monomial basis.
//
// # Safety
// As for `jp_jack`.
enum JpStatus jp_schur(const char *shape, size_t n, struct JpSymPoly **out);

// Interpolation polynomial; `monic` selects the monic normalization,
// otherwise unital. `tableau` selects the tableau-sum construction (monic only).
//
// # Safety
// As for `jp_jack`.
enum JpStatus jp_interp(const char *shape,
                        size_t n,
                        bool monic,
                        bool tableau,
                        struct JpSymPoly **out);

// JSON form `{"n", "basis", "terms": [{"partition", "coeff"}]}`. Release
// with `jp_string_free`.
//
// # Safety
// `p` must be a live handle or null.
char *jp_sympoly_to_json(const struct JpSymPoly *p);

// # Safety
// `p` must be a handle from this library or null; it is invalid afterwards.
void jp_sympoly_free(struct JpSymPoly *p);

// Runs a verification sweep (`claim` as on the command line, e.g.
// `"thm2"`) and writes its JSON report to `out_json`. Returns `Ok` on pass
// and `Counterexample` when the report lists counterexamples.
//
// # Safety
// `claim` must be a valid NUL-terminated string; `out_json` must be writable.
enum JpStatus jp_verify(const char *claim, size_t d, size_t n, char **out_json);

// # Safety
// `s` must be a string returned by this library or null.
void jp_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* JACKPOS_H */
