#ifndef MORSE_PR_H
#define MORSE_PR_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MprStatus {
  MPR_STATUS_OK = 0,
  MPR_STATUS_NULL_ARGUMENT = 1,
  MPR_STATUS_INVALID_UTF8 = 2,
  MPR_STATUS_PARSE_ERROR = 3,
  MPR_STATUS_INVALID_DIAGRAM = 4,
  MPR_STATUS_NOT_OPTIMAL = 5,
  MPR_STATUS_INVALID_ARGUMENT = 6,
  MPR_STATUS_PANIC = 7,
} MprStatus;

typedef enum MprSymmetry {
  MPR_SYMMETRY_ROTATION_ONLY = 0,
  MPR_SYMMETRY_DIHEDRAL = 1,
} MprSymmetry;

/**
 * A colored chord diagram.
 */
typedef struct MprChord MprChord;

/**
 * A Pr-diagram.
 */
typedef struct MprPr MprPr;

/**
 * Fixed-point counts n1..n6 and the genus of the boundary surface.
 */
typedef struct MprCensus {
  uint32_t n[6];
  int64_t g_boundary;
} MprCensus;

typedef struct MprCounts {
  size_t bases;
  size_t colored;
  size_t river_colored;
  size_t river_bases;
} MprCounts;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the last failed call on this thread, or null. Valid until
 * the next call into the library on the same thread.
 */
const char *mpr_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void mpr_string_free(char *s);

/**
 * Library version, a static string.
 */
const char *mpr_version(void);

/**
 * Parses a colored chord code such as `"2301-grgr"`.
 *
 * # Safety
 * `code` must be a nul-terminated string; `out` must be writable.
 */
enum MprStatus mpr_chord_parse(const char *code, struct MprChord **out);

/**
 * # Safety
 * `h` must come from this library and not be freed twice. Null is ignored.
 */
void mpr_chord_free(struct MprChord *h);

/**
 * The code of the canonical form under `sym`.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum MprStatus mpr_chord_code(const struct MprChord *h, enum MprSymmetry sym, char **out);

/**
 * Whether the diagram satisfies the river criterion.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum MprStatus mpr_chord_is_river(const struct MprChord *h, bool *out);

/**
 * Parses a Pr-diagram from JSON.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum MprStatus mpr_pr_from_json(const char *json, struct MprPr **out);

/**
 * # Safety
 * `h` must come from this library and not be freed twice. Null is ignored.
 */
void mpr_pr_free(struct MprPr *h);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum MprStatus mpr_pr_to_json(const struct MprPr *h, char **out);

/**
 * The Pr-diagram of an optimal colored chord diagram.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum MprStatus mpr_pr_from_chord(const struct MprChord *h, struct MprPr **out);

/**
 * The canonical colored chord diagram of an optimal Pr-diagram.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum MprStatus mpr_pr_to_chord(const struct MprPr *h, enum MprSymmetry sym, struct MprChord **out);

/**
 * Whether all five properties hold. The report (JSON) is written to
 * `report` when it is not null.
 *
 * # Safety
 * `h` must be a live handle; `valid` must be writable.
 */
enum MprStatus mpr_pr_validate(const struct MprPr *h, bool *valid, char **report);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum MprStatus mpr_pr_census(const struct MprPr *h, struct MprCensus *out);

/**
 * Canonical code as lowercase hex.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum MprStatus mpr_pr_code(const struct MprPr *h, enum MprSymmetry sym, char **out);

/**
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum MprStatus mpr_pr_equivalent(const struct MprPr *a,
                                 const struct MprPr *b,
                                 enum MprSymmetry sym,
                                 bool *out);

/**
 * Counts for one genus. `workers == 0` means one worker.
 *
 * # Safety
 * `out` must be writable.
 */
enum MprStatus mpr_classify(uint32_t genus,
                            enum MprSymmetry sym,
                            size_t workers,
                            struct MprCounts *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MORSE_PR_H */
