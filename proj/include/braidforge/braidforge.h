/* braidforge: braid words, knot invariants and cable verification.
 *
 * C API for the shared library. All objects are opaque handles released
 * through the matching *_free function; every fallible call returns a
 * bf_status and writes results through out parameters. Strings returned
 * through char** out parameters are heap-allocated and must be released
 * with bf_string_free. bf_last_error() describes the most recent failure
 * on the calling thread.
 */
#ifndef BRAIDFORGE_H
#define BRAIDFORGE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bf_status {
  BF_OK = 0,
  BF_ERR_INVALID_ARGUMENT = 1, /* validation or parameter error */
  BF_ERR_PARSE = 2,            /* malformed textual input */
  BF_ERR_RESOURCE = 3,         /* configured resource limit exceeded */
  BF_ERR_OVERFLOW = 4,         /* exact arithmetic left the 64-bit range */
  BF_ERR_INTERNAL = 5
} bf_status;

typedef struct bf_braid bf_braid;
typedef struct bf_poly bf_poly;

typedef struct bf_limits {
  int32_t jones_max_strands;   /* <= 0 picks the default (10) */
  int64_t jones_max_crossings; /* <= 0 picks the default (200) */
} bf_limits;

typedef enum bf_move_kind {
  BF_MOVE_FREE_CANCEL = 0,
  BF_MOVE_BRAID_RELATION_FAR = 1,
  BF_MOVE_BRAID_RELATION_NEAR = 2,
  BF_MOVE_CONJUGATE_CYCLIC = 3,
  BF_MOVE_STABILIZE = 4,
  BF_MOVE_DESTABILIZE = 5,
  BF_MOVE_FLIP = 6,
  BF_MOVE_MIRROR = 7,
  BF_MOVE_REVERSE = 8
} bf_move_kind;

const char* bf_version(void);
/* Thread-local message for the last failing call; never NULL. */
const char* bf_last_error(void);
void bf_string_free(char* s);

/* --- braid words -------------------------------------------------------- */

/* Parses the braid text format "n: e1 e2 ...". */
bf_status bf_braid_parse(const char* text, bf_braid** out);
bf_status bf_braid_make(int32_t strands, const int32_t* letters,
                        int64_t letter_count, bf_braid** out);
/* Builds from a family spec: "torus p q", "ttk p q r s",
 * "klink r1,s1 ...", "tlink r1,s1 ...", "cable (<spec>) m j",
 * "halftwist k +|-", "braid n: ...", "lemmasym p q",
 * "morimoto e k1 k2 x1 x2". relaxed != 0 lifts the K-link ordering rule. */
bf_status bf_braid_build_family(const char* spec, int32_t relaxed,
                                bf_braid** out);
void bf_braid_free(bf_braid* w);

int32_t bf_braid_strands(const bf_braid* w);
int64_t bf_braid_letter_count(const bf_braid* w);
/* Copies letters into a caller buffer of at least letter_count entries. */
bf_status bf_braid_letters(const bf_braid* w, int32_t* buffer,
                           int64_t buffer_len);
bf_status bf_braid_format(const bf_braid* w, char** out);
bf_status bf_braid_render_ascii(const bf_braid* w, char** out);

bf_status bf_braid_compose(const bf_braid* a, const bf_braid* b,
                           bf_braid** out);
bf_status bf_braid_inverse(const bf_braid* w, bf_braid** out);
int64_t bf_braid_exponent_sum(const bf_braid* w);
int32_t bf_braid_component_count(const bf_braid* w);
/* images buffer needs strands entries; images[i] = exit position of the
 * strand entering at bottom position i (0-based; bottom acts first). */
bf_status bf_braid_permutation(const bf_braid* w, int32_t* images,
                               int64_t buffer_len);
bf_status bf_braid_apply_move(const bf_braid* w, bf_move_kind kind,
                              int32_t pos, int32_t arg, bf_braid** out);

/* --- invariants ---------------------------------------------------------- */

bf_status bf_alexander(const bf_braid* w, bf_poly** out);
bf_status bf_torus_alexander(int64_t p, int64_t q, bf_poly** out);
bf_status bf_cable_alexander(const bf_poly* delta_companion, int64_t m,
                             int64_t c, bf_poly** out);
/* NULL limits means defaults adjusted by the BRAIDFORGE_JONES_MAX_STRANDS /
 * BRAIDFORGE_JONES_MAX_CROSSINGS environment variables. */
bf_status bf_jones(const bf_braid* w, const bf_limits* limits, bf_poly** out);
bf_status bf_positive_braid_genus(const bf_braid* w, int64_t* out);
/* found receives 0/1; p,q are set when found. */
bf_status bf_identify_torus_knot(const bf_braid* w, const bf_limits* limits,
                                 int32_t* found, int64_t* p, int64_t* q);
bf_status bf_fingerprint_json(const bf_braid* w, const bf_limits* limits,
                              char** out);

void bf_poly_free(bf_poly* p);
int32_t bf_poly_equal(const bf_poly* a, const bf_poly* b);
/* exponent_denominator 1 for Alexander values, 4 for Jones values. */
bf_status bf_poly_text(const bf_poly* p, int32_t exponent_denominator,
                       char** out);
bf_status bf_poly_json(const bf_poly* p, int32_t exponent_denominator,
                       char** out);

/* --- verification -------------------------------------------------------- */

/* level: 0 alexander-only, 1 full. Writes the verdict JSON; status receives
 * 0 consistent, 1 distinct. */
bf_status bf_check_equivalent(const bf_braid* a, const bf_braid* b,
                              int32_t level, const bf_limits* limits,
                              char** json_out, int32_t* distinct);
/* Newline-separated suite ids, with parameter names and descriptions. */
bf_status bf_suite_list(char** out);
/* params: tuples like "5 2 1; 5 3 1" (empty/NULL runs the defaults).
 * timings_in_text annotates the text rendering only; JSON never carries
 * timings so identical runs stay byte-identical. all_expected receives 0/1. */
bf_status bf_run_suite(const char* suite_id, const char* params,
                       const bf_limits* limits, int32_t timings_in_text,
                       char** json_out, char** text_out,
                       int32_t* all_expected);
bf_status bf_scan_conjecture(int32_t p_max, int32_t q_max,
                             int64_t crossing_cap, const bf_limits* limits,
                             char** json_out, char** text_out,
                             int32_t* all_expected);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BRAIDFORGE_H */
