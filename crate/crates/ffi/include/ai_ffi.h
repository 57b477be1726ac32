#ifndef AI_FFI_H
#define AI_FFI_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum AiStatus {
  AI_STATUS_OK = 0,
  AI_STATUS_NULL_POINTER = 1,
  AI_STATUS_UTF8 = 2,
  AI_STATUS_PARSE = 3,
  AI_STATUS_INVALID_ARGUMENT = 4,
  AI_STATUS_DIMENSION_MISMATCH = 5,
  AI_STATUS_NOT_ZERO_DIMENSIONAL = 6,
  AI_STATUS_UNIT_IDEAL = 7,
  AI_STATUS_ZERO_IDEAL = 8,
  AI_STATUS_WORK_LIMIT = 9,
  AI_STATUS_OVERFLOW = 10,
  AI_STATUS_IO = 11,
  AI_STATUS_PANIC = 12,
} AiStatus;

typedef enum AiOrder {
  AI_ORDER_LEX = 0,
  AI_ORDER_GRLEX = 1,
  AI_ORDER_GREVLEX = 2,
} AiOrder;

typedef enum AiFormat {
  AI_FORMAT_CSV = 0,
  AI_FORMAT_JSON = 1,
  AI_FORMAT_TEXT = 2,
} AiFormat;

/**
 * Opaque monomial ideal.
 */
typedef struct AiMonomialIdeal AiMonomialIdeal;

/**
 * Opaque polynomial ideal over the rationals.
 */
typedef struct AiPolynomialIdeal AiPolynomialIdeal;

/**
 * Opaque graded sequence of monomial ideals.
 */
typedef struct AiSequence AiSequence;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *ai_last_error_message(void);

/**
 * Library version as a static nul-terminated string.
 */
const char *ai_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void ai_string_free(char *s);

/**
 * Parses comma-separated monomials. `dim = 0` infers the number of
 * variables from the highest index.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum AiStatus ai_monomial_ideal_parse(const char *text, size_t dim, struct AiMonomialIdeal **out);

/**
 * Builds a monomial ideal from `count` exponent vectors of length `dim`,
 * stored row by row in `exponents`.
 *
 * # Safety
 * `exponents` must point to `dim * count` readable values (it may be null
 * when `count` is 0); `out` must be writable.
 */
enum AiStatus ai_monomial_ideal_from_exponents(size_t dim,
                                               size_t count,
                                               const uint32_t *exponents,
                                               struct AiMonomialIdeal **out);

/**
 * # Safety
 * `ideal` must be null or a handle from this library, not yet freed.
 */
void ai_monomial_ideal_free(struct AiMonomialIdeal *ideal);

/**
 * # Safety
 * `ideal` must be a live handle; `out` must be writable.
 */
enum AiStatus ai_monomial_ideal_dim(const struct AiMonomialIdeal *ideal, size_t *out);

/**
 * Number of minimal generators.
 *
 * # Safety
 * `ideal` must be a live handle; `out` must be writable.
 */
enum AiStatus ai_monomial_ideal_generator_count(const struct AiMonomialIdeal *ideal, size_t *out);

/**
 * Copies generator `index` into `exponent`, which holds `dim` values.
 *
 * # Safety
 * `ideal` must be a live handle; `exponent` must have room for `dim`
 * values.
 */
enum AiStatus ai_monomial_ideal_generator(const struct AiMonomialIdeal *ideal,
                                          size_t index,
                                          uint32_t *exponent);

/**
 * Canonical text of the ideal; free with [`ai_string_free`].
 *
 * # Safety
 * `ideal` must be a live handle; `out` must be writable.
 */
enum AiStatus ai_monomial_ideal_to_string(const struct AiMonomialIdeal *ideal, char **out);

/**
 * Hilbert–Samuel multiplicity of a zero-dimensional ideal.
 *
 * # Safety
 * `ideal` must be a live handle; `out` must be writable.
 */
enum AiStatus ai_multiplicity(const struct AiMonomialIdeal *ideal, uint64_t *out);

/**
 * `length(R/a)` of a zero-dimensional ideal.
 *
 * # Safety
 * `ideal` must be a live handle; `out` must be writable.
 */
enum AiStatus ai_colength(const struct AiMonomialIdeal *ideal, uint64_t *out);

/**
 * Order at the maximal ideal: the least total degree of a generator.
 *
 * # Safety
 * `ideal` must be a live handle; `out` must be writable.
 */
enum AiStatus ai_order(const struct AiMonomialIdeal *ideal, uint64_t *out);

/**
 * Log canonical threshold as a reduced fraction.
 *
 * # Safety
 * `ideal` must be a live handle; `num` and `den` must be writable.
 */
enum AiStatus ai_lct(const struct AiMonomialIdeal *ideal, int64_t *num, int64_t *den);

/**
 * `I(λ·a)` with `λ = num/den > 0`.
 *
 * # Safety
 * `ideal` must be a live handle; `out` must be writable.
 */
enum AiStatus ai_multiplier_ideal(const struct AiMonomialIdeal *ideal,
                                  int64_t num,
                                  int64_t den,
                                  struct AiMonomialIdeal **out);

/**
 * Parses comma-separated polynomials with rational coefficients.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum AiStatus ai_polynomial_ideal_parse(const char *text,
                                        size_t dim,
                                        struct AiPolynomialIdeal **out);

/**
 * # Safety
 * `ideal` must be null or a handle from this library, not yet freed.
 */
void ai_polynomial_ideal_free(struct AiPolynomialIdeal *ideal);

/**
 * Initial monomial ideal under `order`.
 *
 * # Safety
 * `ideal` must be a live handle; `out` must be writable.
 */
enum AiStatus ai_polynomial_initial_ideal(const struct AiPolynomialIdeal *ideal,
                                          enum AiOrder order,
                                          struct AiMonomialIdeal **out);

/**
 * `length(R/I)`, read off the initial ideal under `order`.
 *
 * # Safety
 * `ideal` must be a live handle; `out` must be writable.
 */
enum AiStatus ai_polynomial_colength(const struct AiPolynomialIdeal *ideal,
                                     enum AiOrder order,
                                     uint64_t *out);

/**
 * Parses a sequence descriptor such as `weighted 5 7 5` or
 * `powers x^2, y^3`.
 *
 * # Safety
 * `descriptor` must be a nul-terminated string; `out` must be writable.
 */
enum AiStatus ai_sequence_parse(const char *descriptor, size_t dim, struct AiSequence **out);

/**
 * # Safety
 * `seq` must be null or a handle from this library, not yet freed.
 */
void ai_sequence_free(struct AiSequence *seq);

/**
 * The ideal `a_m`; `m = 0` gives the unit ideal.
 *
 * # Safety
 * `seq` must be a live handle; `out` must be writable.
 */
enum AiStatus ai_sequence_get(const struct AiSequence *seq,
                              uint64_t m,
                              struct AiMonomialIdeal **out);

/**
 * Per-index report for `m = 1..=max_index`. `columns` is a
 * comma-separated subset of `mult,vol,lct,bracket,ord,saturate,colon`,
 * or null for the default. Free the result with [`ai_string_free`].
 *
 * # Safety
 * `seq` must be a live handle; `columns` must be null or a nul-terminated
 * string; `out` must be writable.
 */
enum AiStatus ai_sequence_report(const struct AiSequence *seq,
                                 uint64_t max_index,
                                 uint64_t p_budget,
                                 uint64_t r_budget,
                                 const char *columns,
                                 enum AiFormat format,
                                 char **out);

/**
 * Runs a seeded property suite by name and reports the number of failed
 * and inconclusive checks.
 *
 * # Safety
 * `suite` must be a nul-terminated string; `failed` and `inconclusive`
 * must be writable.
 */
enum AiStatus ai_verify(const char *suite,
                        uint64_t seed,
                        size_t count,
                        uint64_t *failed,
                        uint64_t *inconclusive);

/**
 * Exact rational rendering `p/q` of `num/den` in lowest terms; mainly a
 * convenience for callers printing results of [`ai_lct`].
 *
 * # Safety
 * `out` must be writable.
 */
enum AiStatus ai_rational_to_string(int64_t num, int64_t den, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AI_FFI_H */
