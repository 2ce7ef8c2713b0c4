/* C interface to the exact Macdonald polynomial engine.
 *
 * All computation runs over exact arithmetic in the rational function field
 * Q(q, t).  Results come back as malloc'd text in the caller-chosen format;
 * release them with macq_string_free.  A context owns the optional disk
 * cache and the last error message; contexts are independent and may be
 * used from different threads, but a single context must not be shared
 * between threads without external locking.
 */
#ifndef MACQ_H
#define MACQ_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct macq_ctx macq_ctx;

/* status codes, also used as process exit codes by the bundled CLI */
enum {
  MACQ_OK = 0,
  MACQ_ERR_USAGE = 1,    /* unparseable input or out-of-budget request */
  MACQ_ERR_VERIFY = 2,   /* a property suite found a counterexample */
  MACQ_ERR_INTERNAL = 3  /* invariant violation inside the engine */
};

/* cache_dir may be NULL or empty for a cache-less context */
macq_ctx* macq_ctx_new(const char* cache_dir);
void macq_ctx_free(macq_ctx* ctx);

const char* macq_version(void);

/* message for the most recent failing call on this context; empty string
 * when the last call succeeded; owned by the context */
const char* macq_last_error(const macq_ctx* ctx);

/* Computes one object and renders it.
 *   kind: "J"      homogeneous integral form, needs lambda
 *         "interp" inhomogeneous interpolation polynomial, needs lambda,
 *                  n defaults to |lambda|
 *         "kappa"  set-partition cumulant of the integral forms, needs family
 *         "T"      cumulative factorization error of hook products, needs
 *                  family
 *         "ie"     alternating binomial sums for j = 1..r, needs family,
 *                  n defaults to |family sum|
 *         "kostka" multivariate q,t-Kostka table, needs family
 *   lambda: partition text like "2,1" ("-" or "" for the empty partition)
 *   family: semicolon-joined partitions like "2,1;1;1"
 *   n:      variable count where meaningful, 0 for the default
 *   format: "plain" or "records" (NULL means plain)
 *   out:    receives a malloc'd string on success
 * Returns a status code; on failure *out is set to NULL and
 * macq_last_error carries the message. */
int macq_compute(macq_ctx* ctx, const char* kind, const char* lambda,
                 const char* family, int n, const char* format, char** out);

/* Runs one property suite (names listed by macq_suites).  max_size, r and
 * jobs take defaults when 0.  The rendered report is stored in *out even
 * when the suite fails. */
int macq_verify(macq_ctx* ctx, const char* suite, int max_size, int r,
                int jobs, const char* format, char** out);

/* newline-joined canonical suite list, static storage */
const char* macq_suites(void);

void macq_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* MACQ_H */
