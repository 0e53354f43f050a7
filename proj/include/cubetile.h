#ifndef CUBETILE_H
#define CUBETILE_H

/*
 * C interface to the cubetile library.
 *
 * The library constructs decompositions of a d-dimensional cube into exactly
 * n smaller cubes of nearly equal size, certifies them with exact rational
 * arithmetic, and converts them to/from JSON documents and (for the plane)
 * SVG renderings.
 *
 * Conventions:
 *   - Every fallible call returns a cubetile_status; CUBETILE_OK means the
 *     out-parameters are filled. On failure, cubetile_last_error() returns a
 *     thread-local human-readable message for the most recent failing call.
 *   - Arbitrary-precision integers cross this boundary as decimal strings,
 *     rationals as "p/q" (or plain "p"); decimal literals like "0.5" are
 *     accepted anywhere a rational is expected.
 *   - char* results are allocated by the library; release them with
 *     cubetile_string_free. Handles are released with their *_free call.
 *     Freeing NULL is a no-op.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cubetile_status {
  CUBETILE_OK = 0,
  CUBETILE_ERR_INVALID_ARGUMENT = 1, /* malformed input */
  CUBETILE_ERR_OUT_OF_RANGE = 2,     /* outside the documented domain */
  CUBETILE_ERR_NO_DECOMPOSITION = 3, /* provably impossible (n = 5 squares) */
  CUBETILE_ERR_BELOW_THRESHOLD = 4,  /* n too small for the construction */
  CUBETILE_ERR_NOT_REPRESENTABLE = 5,/* no nonnegative representation */
  CUBETILE_ERR_LIMIT_EXCEEDED = 6,   /* materialization over the piece limit */
  CUBETILE_ERR_PARSE = 7,            /* unreadable document or number */
  CUBETILE_ERR_INTERNAL = 8          /* invariant failure; a library bug */
} cubetile_status;

/* An explicit tiling: outer cube plus piece list. */
typedef struct cubetile_tiling cubetile_tiling;
/* A certificate: the parameters of a construction, no geometry. */
typedef struct cubetile_plan cubetile_plan;
/* The result of verifying a tiling or a plan. */
typedef struct cubetile_report cubetile_report;

const char* cubetile_version(void);

/* Message for the most recent failing call on this thread; never NULL. */
const char* cubetile_last_error(void);

void cubetile_string_free(char* s);
void cubetile_tiling_free(cubetile_tiling* t);
void cubetile_plan_free(cubetile_plan* p);
void cubetile_report_free(cubetile_report* r);

/* ------------------------------------------------------------------ */
/* Constructions                                                       */

/* A square cut into exactly n squares (n >= 4, n != 5), at most two
 * distinct sizes. */
cubetile_status cubetile_plane_tiling(const char* n, cubetile_tiling** out);

/* Certificate for cutting a d-cube into n nearly equal cubes (d >= 2). */
cubetile_status cubetile_cube_plan(int d, const char* n, cubetile_plan** out);

/* Certificate for a three-size decomposition (d >= 3, large n). */
cubetile_status cubetile_threesize_plan(int d, const char* n, cubetile_plan** out);

/* Smallest n from which the d-cube construction is guaranteed with size
 * ratio below 1 + epsilon. Result is a decimal string. */
cubetile_status cubetile_threshold(int d, const char* epsilon, char** n0_out);

/* Explicit tiling for a plan; refuses when the piece count exceeds
 * piece_limit (decimal string). */
cubetile_status cubetile_plan_materialize(const cubetile_plan* plan, const char* piece_limit,
                                          cubetile_tiling** out);

/* ------------------------------------------------------------------ */
/* Inspection                                                          */

int cubetile_tiling_dim(const cubetile_tiling* t);
int64_t cubetile_tiling_piece_count(const cubetile_tiling* t);

/* "theorem2" or "theorem5". */
cubetile_status cubetile_plan_kind(const cubetile_plan* plan, char** out);
/* Total piece count n as a decimal string. */
cubetile_status cubetile_plan_piece_total(const cubetile_plan* plan, char** out);
/* Largest piece side over smallest, as "p/q". */
cubetile_status cubetile_plan_ratio(const cubetile_plan* plan, char** out);

/* ------------------------------------------------------------------ */
/* Verification                                                        */

/* Exact geometric check: containment, pairwise interior disjointness,
 * volume identity. */
cubetile_status cubetile_tiling_verify(const cubetile_tiling* t, cubetile_report** out);

/* Arithmetic check of a certificate's identities. */
cubetile_status cubetile_plan_verify(const cubetile_plan* plan, cubetile_report** out);

int cubetile_report_valid(const cubetile_report* r);
cubetile_status cubetile_report_summary(const cubetile_report* r, char** out);
cubetile_status cubetile_report_piece_count(const cubetile_report* r, char** out);
cubetile_status cubetile_report_ratio(const cubetile_report* r, char** out);
size_t cubetile_report_side_count(const cubetile_report* r);
/* Distinct sides in ascending order, index < cubetile_report_side_count. */
cubetile_status cubetile_report_side(const cubetile_report* r, size_t index, char** out);
size_t cubetile_report_violation_count(const cubetile_report* r);
/* kind_out receives "overlap", "outside" or "volume-deficit"; i/j the
 * offending piece indices (-1 when not piece-specific). */
cubetile_status cubetile_report_violation(const cubetile_report* r, size_t index,
                                          char** kind_out, int64_t* i_out, int64_t* j_out);

/* ------------------------------------------------------------------ */
/* Interchange                                                         */

cubetile_status cubetile_tiling_to_json(const cubetile_tiling* t, char** out);
cubetile_status cubetile_tiling_from_json(const char* json_text, cubetile_tiling** out);
cubetile_status cubetile_plan_to_json(const cubetile_plan* plan, char** out);
cubetile_status cubetile_plan_from_json(const char* json_text, cubetile_plan** out);
/* "tiling", "theorem2" or "theorem5". */
cubetile_status cubetile_document_kind(const char* json_text, char** out);
/* Deterministic SVG; planar tilings only. */
cubetile_status cubetile_tiling_to_svg(const cubetile_tiling* t, char** out);

/* ------------------------------------------------------------------ */
/* Exact comparison of two rational strings: *out = -1, 0 or 1.        */

cubetile_status cubetile_rational_cmp(const char* lhs, const char* rhs, int* out);

#ifdef __cplusplus
}
#endif

#endif /* CUBETILE_H */
