/* C API for the p-ary maximal-decreasing-subtree counting library.
 *
 * All functions return a pmd_status; on failure pmd_last_error() describes
 * what went wrong (thread-local). Strings handed out through char** are
 * heap-allocated and must be released with pmd_string_free(). Handles are
 * opaque and must be released with their matching _destroy function.
 */
#ifndef PMDTREE_H
#define PMDTREE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pmd_status {
    PMD_OK = 0,
    PMD_EINVAL = 1,    /* bad argument (arity < 2, k out of range, ...) */
    PMD_EPARSE = 2,    /* malformed canonical tree text */
    PMD_EBUDGET = 3,   /* enumeration budget exceeded */
    PMD_EMISMATCH = 4, /* formula and oracle disagree */
    PMD_EEMPTY = 5,    /* operation on the empty tree */
    PMD_EATTACH = 6,   /* recompose attachment mismatch */
    PMD_EINTERNAL = 7
} pmd_status;

typedef struct pmd_counter pmd_counter;
typedef struct pmd_tree pmd_tree;
typedef struct pmd_report pmd_report;

/* Message for the most recent failure on this thread; never NULL. */
const char* pmd_last_error(void);

void pmd_string_free(char* s);

/* --- exact counting ----------------------------------------------------- */

/* A counter memoizes the y-recursion for one arity p (p >= 2). */
pmd_status pmd_counter_create(int p, pmd_counter** out);
void pmd_counter_destroy(pmd_counter* c);

/* family is 'y', 'f' or 't'; the count is written as a decimal string. */
pmd_status pmd_counter_count(pmd_counter* c, char family, long long n, long long k, char** out);

/* Sum of the family's row n over k = 0..n. For family 't' the row-sum
 * identity against (pn)_(n-1) is asserted internally. */
pmd_status pmd_counter_row_sum(pmd_counter* c, char family, long long n, char** out);

/* |T^(p)_n| = (pn)_(n-1), as a decimal string. */
pmd_status pmd_total_trees(int p, long long n, char** out);

/* --- trees --------------------------------------------------------------- */

/* Parses the canonical form  tree := "_" | "(" label {"," tree}xp ")".
 * The arity is inferred from the text. */
pmd_status pmd_tree_parse(const char* text, pmd_tree** out);
void pmd_tree_destroy(pmd_tree* t);

pmd_status pmd_tree_encode(const pmd_tree* t, char** out);
pmd_status pmd_tree_arity(const pmd_tree* t, int* out);
pmd_status pmd_tree_size(const pmd_tree* t, long long* out);

/* 1 if all invariants hold, else 0; when a diagnostics pointer is given it
 * receives a newline-separated description (or NULL if valid). */
pmd_status pmd_tree_validate(const pmd_tree* t, int* valid, char** diagnostics);

pmd_status pmd_tree_md_size(const pmd_tree* t, long long* out);
pmd_status pmd_tree_md_subtree(const pmd_tree* t, pmd_tree** out);

/* --- oracle verification ------------------------------------------------- */

typedef void (*pmd_verify_cb)(char family, long long n, long long k, int ok, void* user);

/* Runs formula-vs-enumeration checks for families y, f, t over
 * n in [n_lo, n_hi]. budget caps the total number of generated objects
 * (0 means the default of 1e8). Returns PMD_OK when everything matches,
 * PMD_EMISMATCH on any disagreement, PMD_EBUDGET if the cap was hit. */
pmd_status pmd_verify(int p, long long n_lo, long long n_hi, uint64_t budget, pmd_verify_cb cb,
                      void* user);

/* --- uniform sampling ---------------------------------------------------- */

/* A tree drawn uniformly from T^(p)_n; deterministic in (p, n, seed). */
pmd_status pmd_sample_tree(int p, long long n, uint64_t seed, pmd_tree** out);

/* Draws `trials` trees and tabulates MD-subtree sizes against the exact
 * distribution t(n,k)/(pn)_(n-1). */
pmd_status pmd_sample_md(int p, long long n, long long trials, uint64_t seed, pmd_report** out);
void pmd_report_destroy(pmd_report* r);

pmd_status pmd_report_trials(const pmd_report* r, long long* out);
pmd_status pmd_report_observed(const pmd_report* r, long long k, long long* out);
/* Exact probability as "numerator/denominator". */
pmd_status pmd_report_expected(const pmd_report* r, long long k, char** out);
pmd_status pmd_report_chi_square(const pmd_report* r, double* out);

/* Upper-tail critical value of the chi-square distribution. */
pmd_status pmd_chi_square_critical(double df, double alpha, double* out);

#ifdef __cplusplus
}
#endif

#endif /* PMDTREE_H */
