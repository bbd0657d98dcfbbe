/* hzeta - Hurwitz-zeta integral family toolkit.
 *
 * C interface to the shared library: plain structs, opaque handles and
 * integer status codes. Every function returns HZ_OK on success; on failure
 * the return code classifies the error and hz_last_error() carries a
 * human-readable message (thread-local).
 *
 * Complex scalars travel as hz_complex pairs. Family names, kernel names,
 * candidate ids and verification statuses are exchanged as strings with the
 * same spellings the CLI and the JSON reports use.
 */
#ifndef HZETA_H
#define HZETA_H

#include <stddef.h>

#if defined(_WIN32)
#define HZ_API __declspec(dllexport)
#else
#define HZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct {
    double re;
    double im;
} hz_complex;

typedef enum {
    HZ_OK = 0,
    HZ_ERR_DOMAIN = 1,
    HZ_ERR_POLE = 2,            /* within the pole guard of a singular point */
    HZ_ERR_NO_CONVERGENCE = 3,  /* quadrature level budget exhausted */
    HZ_ERR_BAD_INTEGRAND = 4,   /* non-finite integrand sample */
    HZ_ERR_UNRESOLVED = 5,      /* "canonical" requested before resolution */
    HZ_ERR_AMBIGUOUS = 6,       /* hypothesis resolution had != 1 survivor */
    HZ_ERR_INVALID = 7,         /* malformed arguments / names / JSON */
    HZ_ERR_INTERNAL = 8
} hz_status;

HZ_API const char* hz_status_str(hz_status status);

/* Message for the most recent failure on this thread ("" if none). */
HZ_API const char* hz_last_error(void);

/* Frees strings returned through char** out-parameters. */
HZ_API void hz_string_free(char* s);

/* ---- scalar special functions -------------------------------------- */

HZ_API hz_status hz_log_gamma(hz_complex z, hz_complex* out);

/* Hurwitz zeta by Euler-Maclaurin summation (s != 1, Re a > 0). */
HZ_API hz_status hz_hurwitz_zeta(hz_complex s, hz_complex a, hz_complex* out);

/* The same value through Hermite's integral representation. */
HZ_API hz_status hz_hermite_zeta(hz_complex s, hz_complex a, hz_complex* out);

/* d/ds of the Hurwitz zeta via the differentiated integral representation. */
HZ_API hz_status hz_hurwitz_zeta_ds(hz_complex s, hz_complex a, hz_complex* out);

/* Associated Laguerre polynomial of integer degree (complex parameter and
 * argument). `cond` (nullable) receives the cancellation signal
 * max|term| / |value| of the explicit sum. */
HZ_API hz_status hz_laguerre(int degree, hz_complex k, hz_complex x, hz_complex* value,
                             double* cond);

/* Closed-form kernel transform. kernel is one of "bose", "sinh", "fermi",
 * "cosh"; beta is ignored for the bose entry (fixed 2*pi scale). On return
 * *is_cosine is 1 for the cosh entry (cosine transform) and 0 otherwise. */
HZ_API hz_status hz_kernel_sine_transform(const char* kernel, double w, double beta, double* out,
                                          int* is_cosine);

/* Sine transform of the algebraic factor t^{2n} power_sin_factor(a,s,t). */
HZ_API hz_status hz_g_sine_transform(int n, hz_complex a, hz_complex s, double w, hz_complex* out);

/* Auxiliary zeta combination per kernel (kind 1..4 = bose, sinh, fermi,
 * sech); variant "printed" or "corrected". */
HZ_API hz_status hz_kernel_aux(int kind, const char* variant, hz_complex a, hz_complex sigma,
                               hz_complex* out);

/* ---- sessions: hypothesis resolution state -------------------------- */

typedef struct hz_session hz_session;

HZ_API hz_session* hz_session_new(void);
HZ_API void hz_session_free(hz_session* session);

/* Runs the full resolution pass (eight closed families on their default
 * grids, four kernel Mellin constants); afterwards "canonical" candidate
 * requests succeed against this session. */
HZ_API hz_status hz_session_resolve(hz_session* session, double family_tol, double mellin_tol);

HZ_API int hz_session_is_resolved(const hz_session* session);

/* Canonical candidate id for a family (after resolve). */
HZ_API hz_status hz_session_canonical(const hz_session* session, const char* family, char* buf,
                                      size_t bufsize);

/* Certified constant factor of a kernel Mellin moment (after resolve). */
HZ_API hz_status hz_session_mellin_constant(const hz_session* session, const char* kernel,
                                            double* factor);

/* Errata report of the last resolve as a JSON document (caller frees via
 * hz_string_free). */
HZ_API hz_status hz_session_errata_json(const hz_session* session, char** out);

/* ---- closed forms and quadrature ------------------------------------ */

/* Kernel Mellin moment under a named constant candidate ("printed", "half",
 * "double", or "canonical" with a resolved session; session may be NULL for
 * explicit candidates). */
HZ_API hz_status hz_kernel_mellin(const hz_session* session, const char* kernel, hz_complex s,
                                  hz_complex a, const char* candidate, hz_complex* out);

/* Binomial-sum closed form of a family identity under a candidate id
 * ("canonical" needs a resolved session). */
HZ_API hz_status hz_closed_form(const hz_session* session, const char* family, int n, hz_complex a,
                                hz_complex s, const char* candidate, hz_complex* out);

/* Frequency-domain route for the bose-even family (Re s > 2n). */
HZ_API hz_status hz_laguerre_route(int n, hz_complex a, hz_complex s, double tol, hz_complex* out);

typedef struct {
    hz_complex value;
    double err_estimate;
    long n_evals;
    double truncation_point;
} hz_quad_result;

/* family: "bose-even", "sinh-even", "fermi-even", "sech-even", "bose-odd",
 * "sinh-odd", "fermi-odd", "sech-odd", "open-I", "open-T", "open-L".
 * kernel_scale 0 selects the family default; q applies to open families. */
typedef struct {
    char family[16];
    int n;
    hz_complex a;
    hz_complex s;
    double kernel_scale;
    double q;
} hz_family_spec;

HZ_API hz_status hz_family_quadrature(const hz_family_spec* spec, double tol,
                                      hz_quad_result* out);

/* General half-line quadrature of a real integrand (finite limit at 0+,
 * eventually bounded by C*exp(-decay_rate*t)). */
typedef double (*hz_integrand)(double t, void* ctx);
HZ_API hz_status hz_integrate_half_line(hz_integrand f, void* ctx, double tol, double decay_rate,
                                        hz_quad_result* out);

/* ---- verification --------------------------------------------------- */

enum {
    HZ_VERIFY_PASS = 0,
    HZ_VERIFY_FAIL = 1,
    HZ_VERIFY_SKIPPED_POLE = 2,
    HZ_VERIFY_NO_CONVERGENCE = 3
};
HZ_API const char* hz_verify_status_str(int verify_status);

typedef struct {
    hz_family_spec spec;
    char candidate[40];
    hz_complex closed;
    hz_complex quad;
    double abs_err;
    double rel_err;
    double tol;
    int status; /* HZ_VERIFY_* */
    long n_evals;
    double runtime_ms;
} hz_record;

/* One closed-vs-quadrature comparison (open families: quadrature only). */
HZ_API hz_status hz_verify_point(const hz_session* session, const hz_family_spec* spec,
                                 const char* candidate, double tol, hz_record* out);

/* Transform-pair identity check for the bose-even family. */
HZ_API hz_status hz_parseval_check(int n, hz_complex a, hz_complex s, double tol, hz_record* out);

/* ---- sweeps ---------------------------------------------------------- */

typedef struct hz_sweep hz_sweep;

/* grid_json: JSON array of family-spec objects (fields family, n, a, s,
 * kernel_scale?, q?, candidate?; complex values as [re, im] or a number).
 * threads <= 1 runs sequentially; records are merged in grid order either
 * way. */
HZ_API hz_status hz_sweep_run(const hz_session* session, const char* grid_json, double tol,
                              int threads, hz_sweep** out);
HZ_API size_t hz_sweep_count(const hz_sweep* sweep);
HZ_API hz_status hz_sweep_record(const hz_sweep* sweep, size_t index, hz_record* out);
HZ_API int hz_sweep_all_pass(const hz_sweep* sweep);
HZ_API hz_status hz_sweep_json(const hz_sweep* sweep, char** out);
HZ_API hz_status hz_sweep_csv(const hz_sweep* sweep, char** out);
HZ_API void hz_sweep_free(hz_sweep* sweep);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HZETA_H */
