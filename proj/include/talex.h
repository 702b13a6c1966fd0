#ifndef TALEX_H
#define TALEX_H

/* C API for the talex library: Alexander and twisted Alexander invariants of
 * links given by braid words or PD codes, 1/q-surgery twist families, and
 * Mahler-measure experiments.
 *
 * All functions return a talex_status; on failure talex_last_error() holds a
 * message (thread local). Structured results are returned as JSON strings
 * allocated by the library; release them with talex_string_free(). Link
 * handles are opaque and freed with talex_link_free().
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    TALEX_OK = 0,
    TALEX_ERR = 1,            /* unspecified failure */
    TALEX_ERR_PARSE = 2,      /* malformed input text */
    TALEX_ERR_CONVENTION = 3, /* exact-division diagnostic tripped */
    TALEX_ERR_NUMERIC = 4,    /* numeric routine failed to converge */
    TALEX_ERR_ARG = 5         /* invalid argument or precondition */
} talex_status;

typedef struct talex_link talex_link;

const char* talex_last_error(void);
void talex_string_free(char* s);
void talex_link_free(talex_link* link);

/* Builders. strands = 0 infers the count from the braid word. */
talex_status talex_link_from_braid(const char* word, int strands, talex_link** out);
talex_status talex_link_from_braid_with_axis(const char* word, int strands, talex_link** out);
talex_status talex_link_from_pd(const char* pd_text, talex_link** out);

int talex_link_component_count(const talex_link* link);
int talex_link_crossing_count(const talex_link* link);

/* Multivariable Alexander polynomial of the link. */
talex_status talex_invariant(const talex_link* link, char** json_out);

/* Twisted invariants for a permutation representation, given in cycle text
 * (`x0=(1 2 3); x1=(1 3)`) over `symbols` symbols. */
talex_status talex_twisted(const talex_link* link, const char* rep_text, int symbols,
                           char** json_out);

/* Twist family for 1/q-surgery on a component (1-based; 0 = last).
 * rep_text may be NULL for the untwisted family. Zero-linking surgery runs
 * the symbolic route (P = P0 + q P1 + ...); nonzero linking runs the
 * substitution route. with_mahler adds a Mahler column. */
talex_status talex_twist_family(const talex_link* link, int surgery_component, long q_min,
                                long q_max, const char* rep_text, int symbols, int with_mahler,
                                unsigned seed, char** json_out);

/* Mahler measure of a polynomial in text form. method: "auto", "lawton",
 * "quadrature". */
talex_status talex_mahler(const char* poly_text, const char* method, unsigned seed,
                          double* value, double* error_bound, char** json_out);

/* Permutation representations of the link group into S_N. */
talex_status talex_rep_search(const talex_link* link, int symbols, int transitive_only,
                              int max_results, char** json_out);

/* Torsion of n-fold cyclic branched covers, n in [n_min, n_max], for a knot
 * Alexander polynomial in text form. */
talex_status talex_torsion_growth(const char* poly_text, int n_min, int n_max, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* TALEX_H */
