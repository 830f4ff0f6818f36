/* torsionlab C interface.
 *
 * Every function returns a tl_status; TL_OK is 0. On failure
 * tl_last_error() describes the most recent error on the calling thread.
 * Strings returned through char** out-parameters are owned by the caller
 * and released with tl_string_free. Handles are released with their
 * matching *_free function; passing NULL to a free function is a no-op.
 */
#ifndef TORSIONLAB_H
#define TORSIONLAB_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(TORSIONLAB_BUILDING)
#    define TL_API __declspec(dllexport)
#  else
#    define TL_API __declspec(dllimport)
#  endif
#else
#  define TL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tl_status {
  TL_OK = 0,
  TL_DIVISION_BY_ZERO = 1,
  TL_POLE_AT_EVALUATION_POINT = 2,
  TL_NON_SQUARE_MATRIX = 3,
  TL_SINGULAR_ASSEMBLY = 4,
  TL_ZERO_INPUT = 5,
  TL_DEGREE_MISMATCH = 6,
  TL_EVEN_TOP_DEGREE = 7,
  TL_DEGENERATE_PAIRING = 8,
  TL_NON_COMMUTING_MONODROMY = 9,
  TL_ZERO_TORSION = 10,
  TL_PARITY_ERROR = 11,
  TL_STIEFEL_WHITNEY_CONDITION_VIOLATED = 12,
  TL_ZERO_DENOMINATOR_TORSION = 13,
  TL_NON_UNITARY_MONODROMY = 14,
  TL_ZERO_ELEMENT = 15,
  TL_MALFORMED_CODE = 16,
  TL_INCONSISTENT_ARCS = 17,
  TL_ZERO_MINOR = 18,
  TL_NON_POLYNOMIAL_IN_Z = 19,
  TL_RECURSION_BUDGET_EXCEEDED = 20,
  TL_NON_ACYCLIC_BUNDLE = 21,
  TL_COMPLEX_INVALID = 22,
  TL_PARSE_ERROR = 23,
  TL_NOT_A_KNOT = 24,
  TL_INVALID_ARGUMENT = 25,
  TL_INTERNAL = 26
} tl_status;

typedef struct tl_complex tl_complex;
typedef struct tl_knot tl_knot;

TL_API const char* tl_version(void);
/* Symbolic name of a status, e.g. "NonAcyclicBundle". */
TL_API const char* tl_status_name(int status);
/* Message of the last failure on this thread; "" after success. */
TL_API const char* tl_last_error(void);
TL_API void tl_string_free(char* s);
/* Directory of the shipped PD fixtures: $TORSIONLAB_FIXTURES, else the
 * build-time default. */
TL_API int tl_fixtures_dir(char** dir);

/* ---- chain complexes ---------------------------------------------------- */

/* Parses the text format ("field", "dims", "d q" blocks). A non-NULL
 * `field` ("rational", "laurent", "ratfunc", "complex") replaces the field
 * line of the input. The complex is validated (d^2 = 0). */
TL_API int tl_complex_parse(const char* text, const char* field, tl_complex** out);
TL_API void tl_complex_free(tl_complex* c);
TL_API int tl_complex_field(const tl_complex* c, char** field);
/* Canonical text form. */
TL_API int tl_complex_print(const tl_complex* c, char** text);

/* Torsion coordinate relative to the standard cell frame and the
 * deterministic homology frame, with the sign residues. alpha, beta:
 * space-separated per-degree values. Any out-pointer may be NULL. */
TL_API int tl_complex_torsion(const tl_complex* c, char** torsion, int* n_sign, char** alpha, char** beta);

/* ---- knots --------------------------------------------------------------- */

/* PD code text; see the fixtures for the format. */
TL_API int tl_knot_parse(const char* text, tl_knot** out);
TL_API void tl_knot_free(tl_knot* k);
TL_API int tl_knot_info(const tl_knot* k, int* crossings, int* components, int* writhe);

/* Conway polynomial in z through the torsion of the 0-surgery. */
TL_API int tl_knot_conway(const tl_knot* k, char** poly);
/* Conway polynomial by skein recursion, with recursion statistics. */
TL_API int tl_knot_conway_skein(const tl_knot* k, char** poly, size_t* nodes, size_t* checks, size_t* failures);
/* Alexander polynomial in t normalized to lowest degree 0 and positive
 * leading coefficient; sign_at_one is the sign of its value at t = 1. */
TL_API int tl_knot_alexander(const tl_knot* k, char** poly, int* sign_at_one);
/* Canonical torsion of the 0-surgery as an element of Q(t). */
TL_API int tl_knot_canonical_torsion(const tl_knot* k, char** value);
/* Absolute torsion T(F_a) of the 0-surgery and nabla(a^{1/2} - a^{-1/2})
 * (which depends only on a). `a` is a rational ("2", "-3/4") or a complex
 * value ("0.6+0.8i", "cis:1.2"). TL_NON_ACYCLIC_BUNDLE for a = 1 or a root
 * of the Alexander polynomial. */
TL_API int tl_knot_abs_torsion(const tl_knot* k, const char* a, char** torsion, char** conway_value);

/* ---- verification -------------------------------------------------------- */

/* Per-knot checks: both Conway pipelines, skein inline checks, bar
 * symmetry, realness on the unit circle, the phase law and the pairing
 * identity. report: one "name: PASS|FAIL detail" line per check. */
TL_API int tl_knot_verify(const tl_knot* k, int jobs, char** report, int* all_pass);

/* The acceptance suite. fixtures_dir may be NULL (environment variable
 * TORSIONLAB_FIXTURES, else the build-time default). report: one
 * "PASS|FAIL [id] name: detail" line per criterion. */
TL_API int tl_selftest(const char* fixtures_dir, int jobs, int corrupt_sign_table, int timing, char** report,
                       int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* TORSIONLAB_H */
