/* C interface to the hurwitz library. See hw_* function docs. */

#ifndef HURWITZ_H
#define HURWITZ_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every FFI entry point.
typedef enum HwStatus {
  HW_OK = 0,
  // A required pointer argument was NULL.
  HW_ERR_NULL = 1,
  // A string argument was not valid UTF-8.
  HW_ERR_UTF8 = 2,
  // Text input failed to parse.
  HW_ERR_PARSE = 3,
  // An argument was outside its domain (bad case number, zero exponent, …).
  HW_ERR_DOMAIN = 4,
  // Dimension or genus mismatch.
  HW_ERR_DIMENSION = 5,
  // A Hurwitz move index was out of bounds.
  HW_ERR_BOUNDS = 6,
  // An internal invariant failed.
  HW_ERR_INTERNAL = 7,
  // A panic was caught at the FFI boundary.
  HW_ERR_PANIC = 8,
} HwStatus;

// A skew-symmetric intersection matrix (opaque).
typedef struct HwMatrix HwMatrix;

// A sequence of Hurwitz moves (opaque).
typedef struct HwMoves HwMoves;

// An ordered tuple of twist classes (opaque).
typedef struct HwTuple HwTuple;

// One multi-twist term for the intersection lower bound: exponent and the
// two geometric intersection counts with the twisting curve.
typedef struct HwIvanovTerm {
  int64_t exponent;
  uint64_t int_gamma1;
  uint64_t int_gamma2;
} HwIvanovTerm;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Crate version as a static string; do not free.
const char *hw_version(void);

// Frees a string returned by this library.
void hw_string_free(char *s);

// Parses a tuple file (see the text formats in the core crate docs).
enum HwStatus hw_tuple_parse(const char *text, struct HwTuple **out);

// Builds the standard tuple `A1`, `A2` or `A3` (`which` in 1..=3), with the
// extra `γ1` entry appended when `with_gamma1` is true.
enum HwStatus hw_tuple_standard(uint8_t which, bool with_gamma1, struct HwTuple **out);

enum HwStatus hw_tuple_len(const struct HwTuple *t, size_t *out);

// Serializes a tuple back to its text format.
enum HwStatus hw_tuple_format(const struct HwTuple *t, char **out);

void hw_tuple_free(struct HwTuple *t);

// Parses whitespace-separated `L<k>` / `R<k>` tokens.
enum HwStatus hw_moves_parse(const char *text, struct HwMoves **out);

// The shipped certificate sequence `q1`, `q2` or `q3` (`case` in 1..=3).
enum HwStatus hw_moves_shipped(uint8_t case_, struct HwMoves **out);

enum HwStatus hw_moves_len(const struct HwMoves *m, size_t *out);

enum HwStatus hw_moves_format(const struct HwMoves *m, char **out);

void hw_moves_free(struct HwMoves *m);

enum HwStatus hw_matrix_of_tuple(const struct HwTuple *t, struct HwMatrix **out);

// Parses comma-separated rows; the matrix must be skew-symmetric.
enum HwStatus hw_matrix_parse(const char *text, struct HwMatrix **out);

enum HwStatus hw_matrix_size(const struct HwMatrix *m, size_t *out);

enum HwStatus hw_matrix_all_offdiagonal_nonzero(const struct HwMatrix *m, bool *out);

// Serializes as lines of comma-separated integers.
enum HwStatus hw_matrix_format(const struct HwMatrix *m, char **out);

void hw_matrix_free(struct HwMatrix *m);

// Applies a move sequence at the tuple level.
enum HwStatus hw_apply_sharp(const struct HwTuple *t,
                             const struct HwMoves *m,
                             struct HwTuple **out);

// Applies a move sequence at the matrix level.
enum HwStatus hw_apply_flat(const struct HwMatrix *m,
                            const struct HwMoves *moves,
                            struct HwMatrix **out);

// Runs the certificate check for `case` in 1..=3. `out_report` may be NULL
// if only the verdict is wanted.
enum HwStatus hw_verify_lemma(uint8_t case_, bool *out_passed, char **out_report);

// Checks a chain relation: `chain4-pow5`, `chain5-pow6` or `palindrome-sq`.
enum HwStatus hw_verify_relation(const char *name, bool *out_passed, char **out_report);

// Checks a worked monodromy family: `ex41` or `ex42`.
enum HwStatus hw_verify_example(const char *name, bool *out_passed, char **out_report);

// Deterministic certificate search. `strategy` is 0 for greedy-random, 1
// for pure-random. On return `*out_found` says whether a sequence was
// found; `*out_moves` holds it (or NULL).
enum HwStatus hw_search_nonzero(const struct HwTuple *t,
                                uint64_t seed,
                                size_t max_moves,
                                size_t restarts,
                                double time_limit_seconds,
                                uint8_t strategy,
                                bool *out_found,
                                struct HwMoves **out_moves);

enum HwStatus hw_bounds_wolpert(double d, double *out);

enum HwStatus hw_bounds_penner(uint32_t h, double *out);

enum HwStatus hw_bounds_eppa_systole(uint32_t h, double *out);

enum HwStatus hw_bounds_lmax(uint32_t h, uint32_t mu, double *out);

enum HwStatus hw_bounds_collar_partner(double l, double *out);

enum HwStatus hw_bounds_k5(double k1, uint32_t mu1, uint32_t mu2, double *out_12, double *out_21);

enum HwStatus hw_bounds_cusp_bracket(double eps1,
                                     double eps2,
                                     double *out_lower,
                                     double *out_upper);

// Multi-twist geometric-intersection lower bound over the given terms.
enum HwStatus hw_ivanov_lower_bound(const struct HwIvanovTerm *terms,
                                    size_t n_terms,
                                    uint64_t cross,
                                    int64_t *out);

// Smallest twisting power that forces intersections positive.
enum HwStatus hw_min_power_n(uint64_t i_delta,
                             uint64_t i_delta_prime,
                             uint64_t cross_upper,
                             uint64_t *out);

// Monte-Carlo check of the hyperbolic separation bound.
enum HwStatus hw_hplane_check_lemma(uint64_t samples,
                                    uint64_t seed,
                                    bool *out_passed,
                                    char **out_report);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* HURWITZ_H */
