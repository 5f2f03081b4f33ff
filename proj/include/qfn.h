/*
 * qfn - exact Pfaffian and Schur P/Q-function toolkit, C interface.
 *
 * All calls fill an opaque result buffer with the requested output (or an
 * error message) and return a status code:
 *   QFN_OK            success, buffer holds the output
 *   QFN_VERIFY_FAILED a verification report came back unequal
 *   QFN_BAD_ARGUMENT  invalid input; buffer holds the message
 *   QFN_INTERNAL      unexpected failure; buffer holds the message
 * Buffers must be released with qfn_buffer_free.
 */
#ifndef QFN_H
#define QFN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define QFN_OK 0
#define QFN_VERIFY_FAILED 1
#define QFN_BAD_ARGUMENT 2
#define QFN_INTERNAL 3

typedef struct qfn_buffer qfn_buffer;

const char* qfn_buffer_data(const qfn_buffer* buf);
size_t qfn_buffer_size(const qfn_buffer* buf);
void qfn_buffer_free(qfn_buffer* buf);

/* Library version as "major.minor.patch". */
const char* qfn_version(void);

/* Comma-separated list of verification suite names. */
const char* qfn_suite_list(void);

/*
 * Expands a Schur function into monomials.
 *   kind    "P", "Q" or "skew" (skew requires mu)
 *   lambda  comma-separated strictly decreasing parts, "" for the empty
 *           partition
 *   mu      inner partition for kind "skew"; NULL or "" otherwise
 *   vars    number of x-variables (>= 0)
 *   format  "json", "csv" or "pretty"
 */
int qfn_compute(const char* kind, const char* lambda, const char* mu, int vars,
                const char* format, qfn_buffer** out);

/*
 * Runs a named verification suite. One line is emitted per identity
 * instance; ordering is deterministic for fixed inputs regardless of the
 * worker count.
 *   vars/yvars/degree  -1 keeps the suite defaults
 *   mode               "symbolic" (default) or "specialized"
 *   seed               specialization seed
 *   threads            worker cap; <= 0 uses all hardware threads
 *   format             "json" (one JSON object per line), "csv" or "pretty"
 */
int qfn_verify(const char* suite, int vars, int yvars, int degree, const char* mode,
               uint64_t seed, int threads, const char* format, qfn_buffer** out);

/*
 * Tabulates Q_lambda for every strict partition of weight <= degree,
 * ordered by (weight, descending lexicographic parts).
 */
int qfn_table(int degree, int vars, const char* format, qfn_buffer** out);

#ifdef __cplusplus
}
#endif

#endif
