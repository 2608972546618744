#include "noise.hpp"

#include <cmath>

#include "gates.hpp"
#include "protocol.hpp"
#include "verify.hpp"

namespace clustersim {

void NoiseParams::validate() const {
    if (!(p_erase >= 0.0 && p_erase <= 1.0))
        fail(ErrorCode::InvalidArgument, "p_erase must be in [0,1]");
    if (!(p_dephase >= 0.0 && p_dephase <= 1.0))
        fail(ErrorCode::InvalidArgument, "p_dephase must be in [0,1]");
    if (!(p_cnot > 0.0 && p_cnot <= 1.0))
        fail(ErrorCode::InvalidArgument, "p_cnot must be in (0,1]");
}

void erase_channel(StateVector &state, int site, bool lost) {
    state.check_site(site);
    if (!lost)
        return;
    const int vac = static_cast<int>(SiteLevel::Vac);
    double vac_pop = state.site_population(site, SiteLevel::Vac);
    if (vac_pop >= kTol) {
        for (std::size_t i = 0; i < state.dim(); ++i)
            if (StateVector::digit(i, site) != vac)
                state.at(i) = 0.0;
        state.renormalize();
        return;
    }
    // No VAC weight to project onto: force a definite VAC at the site.
    const std::size_t st = StateVector::stride(site);
    const std::size_t block = st * 3;
    for (std::size_t outer = 0; outer < state.dim(); outer += block) {
        for (std::size_t inner = 0; inner < st; ++inner) {
            const std::size_t i0 = outer + inner;
            double w = std::norm(state.amplitude(i0)) + std::norm(state.amplitude(i0 + st)) +
                       std::norm(state.amplitude(i0 + 2 * st));
            state.at(i0) = std::sqrt(w);
            state.at(i0 + st) = 0.0;
            state.at(i0 + 2 * st) = 0.0;
        }
    }
    state.renormalize();
}

TrajectoryResult run_trajectory(int n, const NoiseParams &params, RngStream &rng) {
    params.validate();
    const ProtocolPlan plan = build_plan(n);
    TrajectoryResult result{StateVector::all_v(n), 0, 0};

    bool done = false;
    while (!done) {
        result.state = StateVector::all_v(n);
        bool restarted = false;
        for (int k = 1; k <= plan.n_blocks() && !restarted; ++k) {
            auto [first, last] = plan.block_range(k);
            for (std::size_t i = first; i < last; ++i) {
                const GateStep &step = plan.steps[i];
                if (step.kind == GateKind::Cnot) {
                    // Heralded gate: keep attempting until the herald fires.
                    for (;;) {
                        ++result.attempts;
                        if (rng.bernoulli(params.p_cnot))
                            break;
                        if (params.policy == RetryPolicy::RetryGate)
                            continue;
                        ++result.restarts;
                        restarted = true;
                        break;
                    }
                    if (restarted)
                        break;
                }
                apply_step(result.state, step);
            }
            if (restarted)
                break;
            // Per-block dephasing kick on the two touched sites.
            for (int site : {k, k + 1})
                if (rng.bernoulli(params.p_dephase))
                    apply_z(result.state, site);
        }
        done = !restarted;
    }

    for (int site = 1; site <= n; ++site)
        erase_channel(result.state, site, rng.bernoulli(params.p_erase));
    return result;
}

TrialReport run_experiment(int n, const NoiseParams &params, long long trials,
                           std::uint64_t seed) {
    params.validate();
    if (trials < 1)
        fail(ErrorCode::InvalidArgument, "trials must be >= 1");
    const StateVector reference = reference_cluster(n);

    TrialReport report;
    report.n_sites = n;
    report.trials = trials;
    report.seed = seed;
    report.stabilizer_means.assign(static_cast<std::size_t>(n), 0.0);

    // Welford accumulation for the fidelity stream.
    double mean = 0.0, m2 = 0.0;
    double attempts_sum = 0.0, restarts_sum = 0.0;
    for (long long t = 0; t < trials; ++t) {
        RngStream rng(seed, static_cast<std::uint64_t>(t));
        TrajectoryResult traj = run_trajectory(n, params, rng);
        double f = fidelity(traj.state, reference);
        double delta = f - mean;
        mean += delta / static_cast<double>(t + 1);
        m2 += delta * (f - mean);
        attempts_sum += static_cast<double>(traj.attempts);
        restarts_sum += static_cast<double>(traj.restarts);
        for (int a = 1; a <= n; ++a)
            report.stabilizer_means[static_cast<std::size_t>(a - 1)] +=
                expectation(traj.state, chain_stabilizer(n, a));
    }
    report.mean_fidelity = mean;
    double variance = (trials > 1) ? m2 / static_cast<double>(trials - 1) : 0.0;
    report.stderr_fidelity = std::sqrt(variance / static_cast<double>(trials));
    report.mean_attempts = attempts_sum / static_cast<double>(trials);
    report.mean_restarts = restarts_sum / static_cast<double>(trials);
    for (double &s : report.stabilizer_means)
        s /= static_cast<double>(trials);
    return report;
}

} // namespace clustersim
