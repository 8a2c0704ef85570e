/* raney: exact enumeration of Raney numbers, coral diagrams and
 * source/sink tree webs.
 *
 * C API for the shared library.  All counting results are returned as
 * decimal strings because they outgrow 64-bit integers quickly; every
 * string handed out by the library must be released with
 * raney_string_free().  Enumerations are materialized behind opaque
 * handles and freed with the matching *_free() call.
 *
 * Functions return RANEY_OK on success.  On failure the out-parameters are
 * left untouched and raney_last_error() describes the problem for the
 * calling thread.
 */

#ifndef RANEY_H
#define RANEY_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define RANEY_API __attribute__((visibility("default")))

typedef enum raney_status {
    RANEY_OK = 0,
    RANEY_ERROR_INVALID_ARGUMENT = 1,
    RANEY_ERROR_PARAMETER_MISMATCH = 2,
    RANEY_ERROR_MALFORMED_CODE = 3,
    RANEY_ERROR_SIZE_LIMIT = 4,
    RANEY_ERROR_OUT_OF_MEMORY = 5,
    RANEY_ERROR_INTERNAL = 6
} raney_status;

typedef enum raney_coral_method {
    RANEY_CORAL_TUPLE = 0, /* tuple-of-trees construction */
    RANEY_CORAL_TIERED = 1 /* tier-by-tier construction */
} raney_coral_method;

RANEY_API const char* raney_version(void);

/* Message for the most recent failure on this thread ("" if none). */
RANEY_API const char* raney_last_error(void);

RANEY_API void raney_string_free(char* s);

/* --- exact numbers (decimal strings) --------------------------------- */

RANEY_API raney_status raney_binomial(uint64_t n, int64_t k, char** out);

/* R_{p,r}(n) = r/(np+r) * C(np+r, n); p, r >= 1. */
RANEY_API raney_status raney_number(uint32_t p, uint32_t r, uint32_t n,
                                    char** out);

/* Second closed form r/k * C(pk+r-1, k-1); k >= 1. */
RANEY_API raney_status raney_number_alt(uint32_t p, uint32_t r, uint32_t k,
                                        char** out);

/* k-th p-Catalan number; equals raney_number(p, 1, k). */
RANEY_API raney_status raney_p_catalan(uint32_t p, uint32_t k, char** out);

/* Sum over strong compositions of k of C(r,a_1)*C(p a_1,a_2)*... */
RANEY_API raney_status raney_number_composition_sum(uint32_t p, uint32_t r,
                                                    uint32_t k, char** out);

/* r-fold p-Catalan convolution. */
RANEY_API raney_status raney_number_convolution(uint32_t p, uint32_t r,
                                                uint32_t k, char** out);

/* UNVERIFIED conjectural web counts (closed-form predictions only):
 *   constant_out = (n-2)^k * R_{n+1,n-1}(k)
 *   pointed_out  = (n-2)^k * R_{n-1,n-j}(k)
 * Requires n >= 3 and 1 <= j <= n-1. */
RANEY_API raney_status raney_conjecture_values(uint32_t n, uint32_t j,
                                               uint32_t k, char** constant_out,
                                               char** pointed_out);

/* --- coral diagram enumeration ---------------------------------------- */

typedef struct raney_corals raney_corals;

/* Materializes every (p,r) coral diagram with k stars, sorted by canonical
 * code.  Fails with RANEY_ERROR_SIZE_LIMIT when the family size (known in
 * advance from the closed form) exceeds cap. */
RANEY_API raney_status raney_corals_enumerate(uint32_t p, uint32_t r,
                                              uint32_t k, uint64_t cap,
                                              raney_coral_method method,
                                              raney_corals** out);

RANEY_API uint64_t raney_corals_count(const raney_corals* handle);

/* Record line "p r k c,o,d,e" for the index-th diagram. */
RANEY_API raney_status raney_corals_record(const raney_corals* handle,
                                           uint64_t index, char** out);

/* Graphviz text for the index-th diagram. */
RANEY_API raney_status raney_corals_dot(const raney_corals* handle,
                                        uint64_t index, char** out);

RANEY_API void raney_corals_free(raney_corals* handle);

/* Counts the family by generating it (independent of the closed form). */
RANEY_API raney_status raney_count_coral(uint32_t p, uint32_t r, uint32_t k,
                                         uint64_t cap, char** out);

/* --- coral bijections -------------------------------------------------- */

/* Subdivides the reserved leftmost base edge of the (p,p) diagram encoded
 * by code_csv ("p+1,0,..." canonical code), yielding the code of the
 * corresponding (p,1) diagram with one extra star. */
RANEY_API raney_status raney_coral_subdivide(uint32_t p, const char* code_csv,
                                             char** out_code_csv);

/* Chain lengths above the r eligible base edges of a (1,r) diagram, as a
 * comma-separated weak composition. */
RANEY_API raney_status raney_coral_chain_parts(uint32_t r,
                                               const char* code_csv,
                                               char** out_parts_csv);

/* --- oriented tree webs ------------------------------------------------ */

typedef struct raney_webs raney_webs;

/* Source/sink oriented (p+1)-valent trees with all-'+' boundary; counted
 * by R(p^2, p, k).  p >= 2. */
RANEY_API raney_status raney_webs_sourcesink(uint32_t p, uint32_t k,
                                             uint64_t cap, raney_webs** out);

/* Trivalent tree webs with boundary '-' then 3k+1 '+'; counted by
 * R(4, 1, k). */
RANEY_API raney_status raney_webs_minus(uint32_t k, uint64_t cap,
                                        raney_webs** out);

RANEY_API uint64_t raney_webs_count(const raney_webs* handle);

/* Record line "p r k c,o,d,e boundary classes". */
RANEY_API raney_status raney_webs_record(const raney_webs* handle,
                                         uint64_t index, char** out);

/* Graphviz digraph (edges point source -> sink). */
RANEY_API raney_status raney_webs_dot(const raney_webs* handle, uint64_t index,
                                      char** out);

RANEY_API void raney_webs_free(raney_webs* handle);

/* Unique coherent source/sink orientation of the tree encoded by code_csv
 * realizing the boundary word ('+'/'-' string).  Sets *matched to 1 and
 * fills *out_classes (one class character per vertex in preorder) when the
 * orientation exists, else *matched = 0 with *out_classes untouched; both
 * outcomes return RANEY_OK. */
RANEY_API raney_status raney_orient_with_word(const char* code_csv,
                                              const char* word, int* matched,
                                              char** out_classes);

/* Brute-force oracle: number of (p+1)-valent trees with boundary length
 * k(p^2-1)+(p+1) that orient with the all-'+' word. */
RANEY_API raney_status raney_sourcesink_filter_count(uint32_t p, uint32_t k,
                                                     uint64_t cap, char** out);

/* --- verification ------------------------------------------------------ */

/* Runs every identity/bijection/enumeration suite.  report receives the
 * full "PASS/FAIL name: detail" text; all_passed receives 1 or 0.  The
 * p/r/k maxima scale the arithmetic identity suites; cap bounds the
 * brute-force filters. */
RANEY_API raney_status raney_verify(uint32_t p_max, uint32_t r_max,
                                    uint32_t k_max, uint64_t cap,
                                    char** report, int* all_passed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RANEY_H */
