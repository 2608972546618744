#pragma once

#include <cstdint>
#include <vector>

#include "rng.hpp"
#include "state.hpp"

namespace clustersim {

enum class RetryPolicy {
    // Heralded CNOT failure leaves the register untouched; repeat the gate.
    RetryGate,
    // Heralded failure destroys the register; re-prepare |v...v> and replay.
    RestartAll,
};

struct NoiseParams {
    double p_erase = 0.0;   // per-site erasure prob, applied once post-protocol
    double p_dephase = 0.0; // per-site Z-kick prob after each pair-block
    double p_cnot = 1.0;    // per-attempt heralded CNOT success prob, (0, 1]
    RetryPolicy policy = RetryPolicy::RetryGate;

    void validate() const;
};

struct TrialReport {
    int n_sites = 0;
    long long trials = 0;
    double mean_fidelity = 0.0;
    double stderr_fidelity = 0.0;
    double mean_attempts = 0.0; // CNOT attempts per completed run
    double mean_restarts = 0.0; // full restarts per completed run (RESTART_ALL)
    std::vector<double> stabilizer_means; // raw Z-X-Z expectations per site
    std::uint64_t seed = 0;
};

struct TrajectoryResult {
    StateVector state;
    long long attempts = 0;
    long long restarts = 0;
};

// If lost, project the site onto VAC and renormalize. When the site carries
// no VAC weight (the usual case for protocol outputs) the projection is
// empty; the site is then forced to a definite VAC with the residual
// register amplitudes c(rest) = sqrt(sum_level |a(rest, level)|^2) --
// deterministic, nonnegative, with the correct populations on the other
// sites. Either way the result is orthogonal to any zero-VAC reference.
void erase_channel(StateVector &state, int site, bool lost);

// One noisy protocol run; draws only from `rng`.
TrajectoryResult run_trajectory(int n, const NoiseParams &params, RngStream &rng);

// Averages fidelity(trajectory, reference_cluster(n)) over `trials`
// independent trajectories; trial t draws from RngStream(seed, t). Bit
// reproducible for identical (n, params, trials, seed).
TrialReport run_experiment(int n, const NoiseParams &params, long long trials,
                           std::uint64_t seed);

} // namespace clustersim
