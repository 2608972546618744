/* C API for the cluster-state chain simulator.
 *
 * States are opaque handles; every function returns a cs_status and writes
 * results through out-parameters. Sites are 1-based. Basis index i encodes
 * site k's level (vac=0, h=1, v=2) as digit k-1 of i in base 3, site 1
 * being the least significant digit.
 */
#ifndef CLUSTERSIM_H
#define CLUSTERSIM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cs_status {
    CS_OK = 0,
    CS_ERR_INVALID_ARITY = 1,
    CS_ERR_DIMENSION_MISMATCH = 2,
    CS_ERR_SITE_OUT_OF_RANGE = 3,
    CS_ERR_SAME_SITE = 4,
    CS_ERR_NOT_UNITARY = 5,
    CS_ERR_TOO_FEW_SITES = 6,
    CS_ERR_INVALID_PARTITION = 7,
    CS_ERR_VAC_POPULATED = 8,
    CS_ERR_INVALID_ARGUMENT = 9,
    CS_ERR_INTERNAL = 10,
} cs_status;

typedef enum cs_level {
    CS_LEVEL_VAC = 0,
    CS_LEVEL_H = 1,
    CS_LEVEL_V = 2,
} cs_level;

typedef enum cs_pauli_basis {
    CS_BASIS_X = 0,
    CS_BASIS_Y = 1,
    CS_BASIS_Z = 2,
} cs_pauli_basis;

typedef enum cs_policy {
    CS_POLICY_RETRY_GATE = 0,
    CS_POLICY_RESTART_ALL = 1,
} cs_policy;

/* Stable name for a status code ("OK", "SITE_OUT_OF_RANGE", ...). */
const char *cs_status_name(cs_status status);

/* ---- state handles ---- */

typedef struct cs_state cs_state;

/* Basis state from `n_sites` levels (cs_level values). */
cs_status cs_state_basis(const int *levels, int n_sites, cs_state **out);
cs_status cs_state_clone(const cs_state *state, cs_state **out);
void cs_state_free(cs_state *state);

int cs_state_n_sites(const cs_state *state);
long long cs_state_dim(const cs_state *state);
/* Copies all amplitudes into re[]/im[], each of length cs_state_dim(). */
cs_status cs_state_amplitudes(const cs_state *state, double *re, double *im);
/* Population of `level` at `site`, summed over the other sites. */
cs_status cs_state_site_population(const cs_state *state, int site, cs_level level,
                                   double *out);

cs_status cs_inner_product(const cs_state *a, const cs_state *b, double *re, double *im);
cs_status cs_fidelity(const cs_state *a, const cs_state *b, double *out);

/* ---- gates ---- */

cs_status cs_apply_hadamard(cs_state *state, int site);
cs_status cs_apply_x(cs_state *state, int site);
cs_status cs_apply_z(cs_state *state, int site);
cs_status cs_apply_cnot(cs_state *state, int control, int target);
/* 3x3 matrix, row-major over (vac, h, v); re9/im9 length 9 (im9 may be NULL).
 * With require_unitary nonzero the matrix must be unitary within 1e-12. */
cs_status cs_apply_site_matrix(cs_state *state, int site, const double *re9,
                               const double *im9, int require_unitary);

/* ---- protocol ---- */

/* Pipeline output for an n-site chain (n >= 2). */
cs_status cs_run_protocol(int n, cs_state **out);
/* Closed-form cluster state, built without gates. */
cs_status cs_reference_cluster(int n, cs_state **out);

/* ---- verification ---- */

/* axes: string of length n_sites over "IXYZ", site 1 first; sign is +1/-1.
 * Paulis act on the {H,V} subspace and are identity on VAC. */
cs_status cs_expectation(const cs_state *state, const char *axes, int sign, double *out);
/* Boundary-trimmed Z-X-Z stabilizer expectation centred on `site`. */
cs_status cs_stabilizer_expectation(const cs_state *state, int site, double *out);
/* Von Neumann entropy (base 2) across left_sites | rest. */
cs_status cs_entanglement_entropy(const cs_state *state, const int *left_sites,
                                  int n_left, double *out);
/* Both outcome branches of a projective Pauli measurement. prob_out has
 * length 2 (index 0 = outcome +1); states_out receives two new handles
 * (a zero-probability branch carries a zero state). */
cs_status cs_measure_pauli(const cs_state *state, int site, cs_pauli_basis basis,
                           double *prob_out, cs_state **states_out);
/* ok_out = 1 iff every X-measurement branch on the interior sites leaves
 * sites (1, n) maximally entangled (>= 1 ebit - 1e-9). n >= 3. */
cs_status cs_bell_extraction_check(int n, int *ok_out);
/* Brute-force minimal disentangling Pauli-measurement count, 2 <= n <= 4. */
cs_status cs_persistency_upper_bound(int n, int *out);

/* ---- noise ---- */

typedef struct cs_noise_params {
    double p_erase;   /* per-site erasure prob, applied once post-protocol */
    double p_dephase; /* per-site Z-kick prob after each pair-block */
    double p_cnot;    /* per-attempt heralded CNOT success prob, (0, 1] */
    cs_policy policy;
} cs_noise_params;

typedef struct cs_trial_report {
    int n_sites;
    long long trials;
    double mean_fidelity;
    double stderr_fidelity;
    double mean_attempts;
    double mean_restarts;
    unsigned long long seed;
} cs_trial_report;

/* Projects `site` to VAC when `lost` is nonzero (see library docs for the
 * zero-VAC-weight collapse rule); identity otherwise. */
cs_status cs_erase_site(cs_state *state, int site, int lost);

/* One noisy trajectory; the random substream is a pure function of
 * (seed, trial). attempts/restarts may be NULL. */
cs_status cs_run_trajectory(int n, const cs_noise_params *params,
                            unsigned long long seed, unsigned long long trial,
                            cs_state **out, long long *attempts, long long *restarts);

/* Monte Carlo aggregate over `trials` trajectories. stabilizer_means, if not
 * NULL, must have length n and receives the per-site raw Z-X-Z expectation
 * averages. Bit-reproducible for identical inputs. */
cs_status cs_run_experiment(int n, const cs_noise_params *params, long long trials,
                            unsigned long long seed, cs_trial_report *report,
                            double *stabilizer_means);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CLUSTERSIM_H */
