#ifndef BOREL_DEGEN_H
#define BOREL_DEGEN_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every entry point.
 */
typedef enum BdStatus {
  BD_STATUS_OK = 0,
  BD_STATUS_NULL_POINTER = 1,
  BD_STATUS_INVALID_UTF8 = 2,
  BD_STATUS_PARSE_ERROR = 3,
  BD_STATUS_INVALID_INPUT = 4,
  BD_STATUS_HYPOTHESIS_VIOLATED = 5,
  BD_STATUS_COMPUTATION_FAILED = 6,
  BD_STATUS_OUT_OF_RANGE = 7,
  BD_STATUS_PANIC = 8,
} BdStatus;

/**
 * Opaque catalogue of saturated Borel-fixed ideals.
 */
typedef struct BdCatalog BdCatalog;

/**
 * Opaque monomial ideal in a polynomial ring.
 */
typedef struct BdMonomialIdeal BdMonomialIdeal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null.  The pointer
 * stays valid until the next call into the library on the same thread.
 */
const char *bd_last_error_message(void);

/**
 * Releases a string returned by the library.
 *
 * # Safety
 * `s` must be null or a string obtained from this library, not yet freed.
 */
void bd_string_free(char *s);

/**
 * Parses a monomial ideal such as `"x^2, x*y, y^4"` in `nvars` variables.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be valid for one write.
 */
enum BdStatus bd_monomial_ideal_parse(const char *text, size_t nvars, struct BdMonomialIdeal **out);

/**
 * Releases a monomial ideal handle.
 *
 * # Safety
 * `h` must be null or a handle from this library, not yet freed.
 */
void bd_monomial_ideal_free(struct BdMonomialIdeal *h);

/**
 * Writes the minimal generators as a newly allocated string.
 *
 * # Safety
 * `h` must be a live handle; `out` must be valid for one write.
 */
enum BdStatus bd_monomial_ideal_to_string(const struct BdMonomialIdeal *h, char **out);

/**
 * Number of minimal generators.
 *
 * # Safety
 * `h` must be a live handle; `out` must be valid for one write.
 */
enum BdStatus bd_monomial_ideal_num_generators(const struct BdMonomialIdeal *h, size_t *out);

/**
 * Whether two ideals have the same minimal generators (`1` or `0`).
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be valid for one write.
 */
enum BdStatus bd_monomial_ideal_equal(const struct BdMonomialIdeal *a,
                                      const struct BdMonomialIdeal *b,
                                      int32_t *out);

/**
 * Saturation with respect to the irrelevant ideal, as a new handle.
 *
 * # Safety
 * `h` must be a live handle; `out` must be valid for one write.
 */
enum BdStatus bd_monomial_ideal_saturation(const struct BdMonomialIdeal *h,
                                           struct BdMonomialIdeal **out);

/**
 * Dimension of the degree-`d` piece of the quotient ring.
 *
 * # Safety
 * `h` must be a live handle; `out` must be valid for one write.
 */
enum BdStatus bd_monomial_ideal_hilbert_function(const struct BdMonomialIdeal *h,
                                                 uint32_t d,
                                                 uint64_t *out);

/**
 * Gotzmann number of a Hilbert polynomial such as `"7t-5"`.
 *
 * # Safety
 * `hp` must be a NUL-terminated string; `out` must be valid for one write.
 */
enum BdStatus bd_gotzmann_number(const char *hp, size_t *out);

/**
 * Enumerates the saturated Borel-fixed ideals with a Hilbert polynomial.
 *
 * # Safety
 * `hp` must be a NUL-terminated string; `out` must be valid for one write.
 */
enum BdStatus bd_catalog_enumerate(const char *hp, size_t nvars, struct BdCatalog **out);

/**
 * Releases a catalogue handle.
 *
 * # Safety
 * `h` must be null or a handle from this library, not yet freed.
 */
void bd_catalog_free(struct BdCatalog *h);

/**
 * Number of ideals in a catalogue.
 *
 * # Safety
 * `h` must be a live handle; `out` must be valid for one write.
 */
enum BdStatus bd_catalog_len(const struct BdCatalog *h, size_t *out);

/**
 * Copy of the ideal with 1-based `label`.
 *
 * # Safety
 * `h` must be a live handle; `out` must be valid for one write.
 */
enum BdStatus bd_catalog_get(const struct BdCatalog *h, size_t label, struct BdMonomialIdeal **out);

/**
 * 1-based label of an ideal in a catalogue.
 *
 * # Safety
 * `h` and `j` must be live handles; `out` must be valid for one write.
 */
enum BdStatus bd_catalog_label(const struct BdCatalog *h,
                               const struct BdMonomialIdeal *j,
                               size_t *out);

/**
 * Initial ideal of the ideal generated by comma-separated polynomials.
 *
 * # Safety
 * `gens` and `order` must be NUL-terminated strings; `out` must be valid for one write.
 */
enum BdStatus bd_initial_ideal(const char *gens,
                               const char *order,
                               size_t nvars,
                               struct BdMonomialIdeal **out);

/**
 * Sizes of the three parts of the C1/C2 partition for `J(l,m)`.
 * `top_power_only` selects the variant of C1 that tests only `y^{2l+m}`.
 *
 * # Safety
 * The three out pointers must be valid for one write each.
 */
enum BdStatus bd_filter_counts(uint32_t l,
                               uint32_t m,
                               int32_t top_power_only,
                               size_t *pass,
                               size_t *fail_c1,
                               size_t *fail_c2);

/**
 * Checks a witness: writes `1` when `in(I_F)` under `order` saturates to `target`.
 *
 * # Safety
 * The string arguments must be NUL-terminated; `out` must be valid for one write.
 */
enum BdStatus bd_witness_verify(uint32_t l,
                                uint32_t m,
                                const char *f,
                                const char *order,
                                const char *target,
                                int32_t *out);

/**
 * Verifies a prediction case by name (for example `"EqProq2.1"`); writes
 * `1` when every branch is confirmed.  `i` and `j` are ignored by `Part`,
 * which uses the zero vector.
 *
 * # Safety
 * `case_name` must be NUL-terminated; `out` must be valid for one write.
 */
enum BdStatus bd_verify_prediction(const char *case_name,
                                   uint32_t l,
                                   uint32_t m,
                                   uint32_t i,
                                   uint32_t j,
                                   int32_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BOREL_DEGEN_H */
