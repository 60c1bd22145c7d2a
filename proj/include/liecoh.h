/*
 * liecoh -- exact-arithmetic Lie-theoretic character calculator.
 *
 * C interface to the computation core.  All functions are thread safe.
 * Conventions at this boundary:
 *   - simple-root indices and Weyl-word letters are 1-based (Bourbaki
 *     numbering, see docs/conventions.md);
 *   - weights are arrays of `rank` ints in fundamental-weight coordinates;
 *   - root vectors are arrays of `rank` ints in simple-root coordinates;
 *   - every computation returns its result as a canonical JSON document
 *     in *out_json, allocated with malloc; release it with lc_string_free.
 *
 * On failure a nonzero status is returned, *out_json is untouched and
 * lc_last_error() describes the problem for the calling thread.
 */

#ifndef LIECOH_H
#define LIECOH_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lc_status {
    LC_OK = 0,
    LC_ERR_INVALID_ARGUMENT = 1, /* malformed input, unknown name, bad index */
    LC_ERR_DOMAIN = 2,           /* violated mathematical precondition */
    LC_ERR_TOO_LARGE = 3,        /* enumeration or dimension cap exceeded */
    LC_ERR_INTERNAL = 4
} lc_status;

typedef struct lc_root_system lc_root_system;

/* "A2", "B3", "G2", ... ; NULL name is invalid. */
lc_status lc_root_system_create(const char* name, lc_root_system** out);
void lc_root_system_destroy(lc_root_system* rs);

int lc_root_system_rank(const lc_root_system* rs);

/* Message for the most recent failure on this thread; never NULL. */
const char* lc_last_error(void);

void lc_string_free(char* s);

/* Cartan data, positive roots, rho, Coxeter number, highest (short) root. */
lc_status lc_roots_json(const lc_root_system* rs, char** out_json);

/* Group order, longest word, number of positive roots. */
lc_status lc_weyl_summary_json(const lc_root_system* rs, char** out_json);

/* Canonical word, length, inversion set and dot-action on 0 of the element
 * given by an arbitrary word. */
lc_status lc_weyl_element_json(const lc_root_system* rs, const int* word, size_t word_len,
                               char** out_json);

/* Image of `weight` under the element; use_dot != 0 applies the dot action. */
lc_status lc_weyl_action_json(const lc_root_system* rs, const int* word, size_t word_len,
                              const int* weight, size_t rank, int use_dot, char** out_json);

/* Minimal coset representatives for W_J \ W, the longest element of W_J,
 * and a reduced word for w_0 adapted to J with its induced root order. */
lc_status lc_coset_json(const lc_root_system* rs, const int* J, size_t J_len, char** out_json);

/* q-analog Kostant partition of mu (simple-root coordinates) over the
 * positive roots outside Phi_J^+ (J empty gives all of Phi^+). */
lc_status lc_kostant_json(const lc_root_system* rs, const int* J, size_t J_len, const int* mu,
                          size_t rank, char** out_json);

/* Character of H^0(lambda); levi != 0 computes the Levi character for J. */
lc_status lc_character_json(const lc_root_system* rs, const int* lambda, size_t rank, int levi,
                            const int* J, size_t J_len, char** out_json);

/* Euler characteristic of the induction of S^degree(u_J^*) twisted by gamma,
 * with its decomposition into H^0 summands. */
lc_status lc_induce_json(const lc_root_system* rs, const int* J, size_t J_len, int degree,
                         const int* gamma, size_t rank, char** out_json);

/* Graded multiplicity [ind(S^bullet(u_J^*) (x) gamma) : H^0(sigma)]_q. */
lc_status lc_multiplicity_json(const lc_root_system* rs, const int* J, size_t J_len,
                               const int* gamma, const int* sigma, size_t rank, char** out_json);

/* Poincare series of the twisted coordinate ring up to the given degree. */
lc_status lc_series_json(const lc_root_system* rs, const int* J, size_t J_len, const int* gamma,
                         size_t rank, int up_to, char** out_json);

/* Cohomology prediction table.  realization is one of "3.3", "4.2", "5.1",
 * "7.1", "7.3", "7.4"; ell_or_p is the quantum parameter or the prime;
 * w may be NULL (identity); t is only read by "3.3"/"7.1". */
lc_status lc_predict_json(const lc_root_system* rs, const char* realization, long long ell_or_p,
                          const int* J, size_t J_len, const int* gamma, size_t rank,
                          const int* w_word, size_t w_len, int t, int up_to, char** out_json);

/* Verification sweeps.  check is "weighteq", "kempf" or "linkage".
 * With w_all != 0 the report covers every w in ^J W (w_word ignored) and
 * the sweep may use `workers` threads; output is independent of the
 * worker count.  gamma may be NULL (zero weight); nu_bound only applies
 * to "linkage"; cap bounds dim H^0(epsilon_J) for "weighteq". */
lc_status lc_verify_json(const lc_root_system* rs, const char* check, long long ell, const int* J,
                         size_t J_len, const int* w_word, size_t w_len, int w_all,
                         const int* gamma, size_t rank, int nu_bound, long long cap, int workers,
                         char** out_json);

/* Richardson orbit data for GL_n and the coordinate-ring series of the
 * orbit closure up to degree up_to (up_to < 0 omits the series). */
lc_status lc_orbit_json(int n, const int* J, size_t J_len, int up_to, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* LIECOH_H */
