#ifndef SPINPAIR_H
#define SPINPAIR_H

/* C API of the spinpair engine: exact diagonalization, thermal states, and
 * entanglement/coherence measures for a spin-s XXZ pair in a non-uniform
 * transverse field,
 *
 *   H = -h1 s1z - h2 s2z + J (s1x s2x + s1y s2y) + Jz s1z s2z  (+ DM term D).
 *
 * All functions are pure given their inputs and safe to call concurrently on
 * distinct handles. Handles are opaque; every entry point returns a status
 * code and writes results through out-parameters.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sp_status {
    SP_OK = 0,
    SP_ERR_NULL_ARG = 1,      /* required pointer argument was NULL */
    SP_ERR_INVALID_PARAM = 2, /* parameter outside its documented domain */
    SP_ERR_DOMAIN = 3,        /* operation undefined for this spin/state */
    SP_ERR_NO_BRACKET = 4,    /* bisection could not bracket a sign change */
    SP_ERR_NUMERIC = 5        /* internal numerical failure */
} sp_status;

/* Static message for a status code. */
const char* sp_status_message(sp_status status);

/* Engine version string, "major.minor.patch". */
const char* sp_version(void);

/* Physical parameters. two_s is 2s (so 1 means spin 1/2); couplings and
 * fields share one energy unit. d is the Dzyaloshinskii-Moriya coupling;
 * model creation folds it into j and flips any negative j (both leave the
 * spectrum and the eigenstate entanglement unchanged). */
typedef struct sp_params {
    int two_s;
    double j;
    double jz;
    double h1;
    double h2;
    double d;
} sp_params;

/* ---- model handle: block Hamiltonian of one parameter set ---- */

typedef struct sp_model sp_model;

sp_status sp_model_create(const sp_params* params, sp_model** out);
void sp_model_destroy(sp_model* model);

/* Ground level: energy, number of states within tol_deg (relative), and the
 * smallest |M| among them. Pass tol_deg <= 0 for the default 1e-9. */
sp_status sp_model_ground_state(const sp_model* model, double tol_deg, double* energy,
                                int* degeneracy, int* abs_magnetization);

/* Gap between the two lowest eigenvalues of the full spectrum. */
sp_status sp_model_gap(const sp_model* model, double* gap);

/* ---- state handle: a density matrix of the model's pair space ---- */

typedef struct sp_state sp_state;

/* Gibbs state at temperature >= 0 (0 gives the uniform ground-level mixture). */
sp_status sp_state_thermal(const sp_model* model, double temperature, sp_state** out);
void sp_state_destroy(sp_state* state);

sp_status sp_state_negativity(const sp_state* state, double* out);
/* Wootters concurrence / entanglement of formation; two_s == 1 only. */
sp_status sp_state_concurrence(const sp_state* state, double* out);
sp_status sp_state_eof(const sp_state* state, double* out);
/* Relative entropy of coherence in the standard product basis. */
sp_status sp_state_coherence(const sp_state* state, double* out);

/* ---- phase structure ---- */

/* Ground-state entanglement verdict of the closed-form boundary
 * |h1+h2| < 2s jz + sqrt(4 s^2 j^2 + (h1-h2)^2); margin = RHS - |h1+h2|. */
sp_status sp_gs_boundary(const sp_params* params, int* entangled, double* margin);

/* Limit temperature for whole-plane entanglement (0 when jz <= -j). */
sp_status sp_critical_temperature(int two_s, double j, double jz, double* kt_c);

/* Separability-stripe threshold h_c(T): thermal state entangled iff
 * |h1-h2| > h_c. Returns SP_ERR_NO_BRACKET if no onset exists up to
 * |h1-h2| = 20 s max(j,|jz|). */
sp_status sp_stripe_width(int two_s, double j, double jz, double temperature, double* h_c);

/* jz above which the s=1/2 thermal state at field difference dh is entangled. */
sp_status sp_jz_threshold(double j, double dh, double temperature, double* jz_min);

/* The 4s+1-fold degenerate critical points h1 = -h2 = +-h_c/2 for jz < -j:
 * predicted location/degeneracy/energy plus the measured values from exact
 * diagonalization at the point. */
sp_status sp_critical_points(int two_s, double j, double jz, double tol_deg, double* h_c,
                             int* degeneracy, double* energy, int* degeneracy_measured,
                             double* energy_measured);

/* ---- certificates (the `verify` machinery) ---- */

typedef struct sp_lemma1_report {
    double t2_max_abs_err;   /* entrywise error of the conjugation identity */
    double det_rel_err;      /* relative error of the determinant scaling */
    int pt_negative_at_zero; /* PT not positive definite at h_avg = 0 */
    int pt_negative_at_shift;
    int pt_sign_consistent;  /* the two verdicts agree */
    unsigned precision_bits; /* working precision used */
} sp_lemma1_report;

/* Average-field certificates at field difference h1-h2 (baseline h_avg = 0)
 * under an average-field shift; temperature must be > 0. */
sp_status sp_lemma1_certificates(const sp_params* params, double temperature, double h_shift,
                                 sp_lemma1_report* out);

/* Max sorted-spectrum deviation between H(j, d) and the reduced H(sqrt(j^2+d^2)). */
sp_status sp_dm_reduction_error(const sp_params* params, double* max_spectrum_diff);

/* J -> -J gauge certificate: spectrum and per-eigenstate entanglement-entropy
 * deviations between H(j) and H(-j). */
sp_status sp_gauge_flip_error(const sp_params* params, double* max_spectrum_diff,
                              double* max_entropy_diff);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SPINPAIR_H */
