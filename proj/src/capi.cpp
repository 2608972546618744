#include "clustersim/clustersim.h"

#include <cstring>
#include <new>

#include "gates.hpp"
#include "noise.hpp"
#include "protocol.hpp"
#include "state.hpp"
#include "verify.hpp"

using namespace clustersim;

struct cs_state {
    StateVector value;
};

namespace {

cs_status to_status(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArity:
        return CS_ERR_INVALID_ARITY;
    case ErrorCode::DimensionMismatch:
        return CS_ERR_DIMENSION_MISMATCH;
    case ErrorCode::SiteOutOfRange:
        return CS_ERR_SITE_OUT_OF_RANGE;
    case ErrorCode::SameSite:
        return CS_ERR_SAME_SITE;
    case ErrorCode::NotUnitary:
        return CS_ERR_NOT_UNITARY;
    case ErrorCode::TooFewSites:
        return CS_ERR_TOO_FEW_SITES;
    case ErrorCode::InvalidPartition:
        return CS_ERR_INVALID_PARTITION;
    case ErrorCode::VacPopulated:
        return CS_ERR_VAC_POPULATED;
    case ErrorCode::InvalidArgument:
        return CS_ERR_INVALID_ARGUMENT;
    case ErrorCode::Internal:
        return CS_ERR_INTERNAL;
    }
    return CS_ERR_INTERNAL;
}

template <typename Fn> cs_status guarded(Fn &&fn) {
    try {
        fn();
        return CS_OK;
    } catch (const SimError &e) {
        return to_status(e.code());
    } catch (const std::bad_alloc &) {
        return CS_ERR_INTERNAL;
    } catch (const std::exception &) {
        return CS_ERR_INTERNAL;
    }
}

cs_status require(bool ok, cs_status on_fail = CS_ERR_INVALID_ARGUMENT) {
    return ok ? CS_OK : on_fail;
}

PauliBasis to_basis(cs_pauli_basis basis) {
    switch (basis) {
    case CS_BASIS_X:
        return PauliBasis::X;
    case CS_BASIS_Y:
        return PauliBasis::Y;
    case CS_BASIS_Z:
        return PauliBasis::Z;
    }
    fail(ErrorCode::InvalidArgument, "bad pauli basis value");
}

NoiseParams to_params(const cs_noise_params &p) {
    NoiseParams out;
    out.p_erase = p.p_erase;
    out.p_dephase = p.p_dephase;
    out.p_cnot = p.p_cnot;
    switch (p.policy) {
    case CS_POLICY_RETRY_GATE:
        out.policy = RetryPolicy::RetryGate;
        break;
    case CS_POLICY_RESTART_ALL:
        out.policy = RetryPolicy::RestartAll;
        break;
    default:
        fail(ErrorCode::InvalidArgument, "bad retry policy value");
    }
    return out;
}

} // namespace

extern "C" {

const char *cs_status_name(cs_status status) {
    switch (status) {
    case CS_OK:
        return "OK";
    case CS_ERR_INVALID_ARITY:
        return "INVALID_ARITY";
    case CS_ERR_DIMENSION_MISMATCH:
        return "DIMENSION_MISMATCH";
    case CS_ERR_SITE_OUT_OF_RANGE:
        return "SITE_OUT_OF_RANGE";
    case CS_ERR_SAME_SITE:
        return "SAME_SITE";
    case CS_ERR_NOT_UNITARY:
        return "NOT_UNITARY";
    case CS_ERR_TOO_FEW_SITES:
        return "TOO_FEW_SITES";
    case CS_ERR_INVALID_PARTITION:
        return "INVALID_PARTITION";
    case CS_ERR_VAC_POPULATED:
        return "VAC_POPULATED";
    case CS_ERR_INVALID_ARGUMENT:
        return "INVALID_ARGUMENT";
    case CS_ERR_INTERNAL:
        return "INTERNAL";
    }
    return "UNKNOWN";
}

cs_status cs_state_basis(const int *levels, int n_sites, cs_state **out) {
    if (cs_status s = require(levels && out && n_sites >= 0); s != CS_OK)
        return s;
    return guarded([&] {
        std::vector<SiteLevel> site_levels;
        site_levels.reserve(static_cast<std::size_t>(n_sites));
        for (int i = 0; i < n_sites; ++i)
            site_levels.push_back(site_level_from_int(levels[i]));
        *out = new cs_state{StateVector::basis(site_levels)};
    });
}

cs_status cs_state_clone(const cs_state *state, cs_state **out) {
    if (cs_status s = require(state && out); s != CS_OK)
        return s;
    return guarded([&] { *out = new cs_state{state->value}; });
}

void cs_state_free(cs_state *state) { delete state; }

int cs_state_n_sites(const cs_state *state) { return state ? state->value.n_sites() : 0; }

long long cs_state_dim(const cs_state *state) {
    return state ? static_cast<long long>(state->value.dim()) : 0;
}

cs_status cs_state_amplitudes(const cs_state *state, double *re, double *im) {
    if (cs_status s = require(state && re && im); s != CS_OK)
        return s;
    for (std::size_t i = 0; i < state->value.dim(); ++i) {
        re[i] = state->value.amplitude(i).real();
        im[i] = state->value.amplitude(i).imag();
    }
    return CS_OK;
}

cs_status cs_state_site_population(const cs_state *state, int site, cs_level level,
                                   double *out) {
    if (cs_status s = require(state && out); s != CS_OK)
        return s;
    return guarded([&] {
        *out = state->value.site_population(site, static_cast<SiteLevel>(
                                                      site_level_from_int(level)));
    });
}

cs_status cs_inner_product(const cs_state *a, const cs_state *b, double *re, double *im) {
    if (cs_status s = require(a && b && re && im); s != CS_OK)
        return s;
    return guarded([&] {
        Complex v = inner_product(a->value, b->value);
        *re = v.real();
        *im = v.imag();
    });
}

cs_status cs_fidelity(const cs_state *a, const cs_state *b, double *out) {
    if (cs_status s = require(a && b && out); s != CS_OK)
        return s;
    return guarded([&] { *out = fidelity(a->value, b->value); });
}

cs_status cs_apply_hadamard(cs_state *state, int site) {
    if (cs_status s = require(state != nullptr); s != CS_OK)
        return s;
    return guarded([&] { apply_hadamard(state->value, site); });
}

cs_status cs_apply_x(cs_state *state, int site) {
    if (cs_status s = require(state != nullptr); s != CS_OK)
        return s;
    return guarded([&] { apply_x(state->value, site); });
}

cs_status cs_apply_z(cs_state *state, int site) {
    if (cs_status s = require(state != nullptr); s != CS_OK)
        return s;
    return guarded([&] { apply_z(state->value, site); });
}

cs_status cs_apply_cnot(cs_state *state, int control, int target) {
    if (cs_status s = require(state != nullptr); s != CS_OK)
        return s;
    return guarded([&] { apply_cnot(state->value, control, target); });
}

cs_status cs_apply_site_matrix(cs_state *state, int site, const double *re9,
                               const double *im9, int require_unitary) {
    if (cs_status s = require(state && re9); s != CS_OK)
        return s;
    return guarded([&] {
        Mat3 m;
        for (std::size_t i = 0; i < 9; ++i)
            m[i] = Complex(re9[i], im9 ? im9[i] : 0.0);
        state->value.apply_site_matrix(site, m, require_unitary != 0);
    });
}

cs_status cs_run_protocol(int n, cs_state **out) {
    if (cs_status s = require(out != nullptr); s != CS_OK)
        return s;
    return guarded([&] { *out = new cs_state{run_protocol(n)}; });
}

cs_status cs_reference_cluster(int n, cs_state **out) {
    if (cs_status s = require(out != nullptr); s != CS_OK)
        return s;
    return guarded([&] { *out = new cs_state{reference_cluster(n)}; });
}

cs_status cs_expectation(const cs_state *state, const char *axes, int sign, double *out) {
    if (cs_status s = require(state && axes && out && (sign == 1 || sign == -1)); s != CS_OK)
        return s;
    return guarded([&] {
        PauliString p;
        p.sign = sign;
        for (const char *c = axes; *c; ++c) {
            switch (*c) {
            case 'I':
                p.axes.push_back(PauliAxis::I);
                break;
            case 'X':
                p.axes.push_back(PauliAxis::X);
                break;
            case 'Y':
                p.axes.push_back(PauliAxis::Y);
                break;
            case 'Z':
                p.axes.push_back(PauliAxis::Z);
                break;
            default:
                fail(ErrorCode::InvalidArgument,
                     std::string("bad Pauli axis character '") + *c + "'");
            }
        }
        *out = expectation(state->value, p);
    });
}

cs_status cs_stabilizer_expectation(const cs_state *state, int site, double *out) {
    if (cs_status s = require(state && out); s != CS_OK)
        return s;
    return guarded([&] {
        *out = expectation(state->value, chain_stabilizer(state->value.n_sites(), site));
    });
}

cs_status cs_entanglement_entropy(const cs_state *state, const int *left_sites,
                                  int n_left, double *out) {
    if (cs_status s = require(state && left_sites && out && n_left >= 0); s != CS_OK)
        return s;
    return guarded([&] {
        std::vector<int> left(left_sites, left_sites + n_left);
        *out = entanglement_entropy(state->value, left);
    });
}

cs_status cs_measure_pauli(const cs_state *state, int site, cs_pauli_basis basis,
                           double *prob_out, cs_state **states_out) {
    if (cs_status s = require(state && prob_out && states_out); s != CS_OK)
        return s;
    return guarded([&] {
        auto branches = measure_pauli(state->value, site, to_basis(basis));
        prob_out[0] = branches[0].record.probability;
        prob_out[1] = branches[1].record.probability;
        states_out[0] = new cs_state{std::move(branches[0].state)};
        states_out[1] = new cs_state{std::move(branches[1].state)};
    });
}

cs_status cs_bell_extraction_check(int n, int *ok_out) {
    if (cs_status s = require(ok_out != nullptr); s != CS_OK)
        return s;
    return guarded([&] { *ok_out = bell_extraction_check(n) ? 1 : 0; });
}

cs_status cs_persistency_upper_bound(int n, int *out) {
    if (cs_status s = require(out != nullptr); s != CS_OK)
        return s;
    return guarded([&] { *out = persistency_upper_bound(n); });
}

cs_status cs_erase_site(cs_state *state, int site, int lost) {
    if (cs_status s = require(state != nullptr); s != CS_OK)
        return s;
    return guarded([&] { erase_channel(state->value, site, lost != 0); });
}

cs_status cs_run_trajectory(int n, const cs_noise_params *params,
                            unsigned long long seed, unsigned long long trial,
                            cs_state **out, long long *attempts, long long *restarts) {
    if (cs_status s = require(params && out); s != CS_OK)
        return s;
    return guarded([&] {
        RngStream rng(seed, trial);
        TrajectoryResult result = run_trajectory(n, to_params(*params), rng);
        *out = new cs_state{std::move(result.state)};
        if (attempts)
            *attempts = result.attempts;
        if (restarts)
            *restarts = result.restarts;
    });
}

cs_status cs_run_experiment(int n, const cs_noise_params *params, long long trials,
                            unsigned long long seed, cs_trial_report *report,
                            double *stabilizer_means) {
    if (cs_status s = require(params && report); s != CS_OK)
        return s;
    return guarded([&] {
        TrialReport r = run_experiment(n, to_params(*params), trials, seed);
        report->n_sites = r.n_sites;
        report->trials = r.trials;
        report->mean_fidelity = r.mean_fidelity;
        report->stderr_fidelity = r.stderr_fidelity;
        report->mean_attempts = r.mean_attempts;
        report->mean_restarts = r.mean_restarts;
        report->seed = r.seed;
        if (stabilizer_means)
            std::memcpy(stabilizer_means, r.stabilizer_means.data(),
                        r.stabilizer_means.size() * sizeof(double));
    });
}

} // extern "C"
