#include "protocol.hpp"

#include <cmath>

namespace clustersim {

std::pair<std::size_t, std::size_t> ProtocolPlan::block_range(int k) const {
    if (k < 1 || k > n_blocks())
        fail(ErrorCode::InvalidArgument, "block index " + std::to_string(k) +
                                             " out of range 1.." + std::to_string(n_blocks()));
    std::size_t first = (k == 1) ? 0 : block_end[static_cast<std::size_t>(k - 2)];
    return {first, block_end[static_cast<std::size_t>(k - 1)]};
}

ProtocolPlan build_plan(int n) {
    if (n < 2)
        fail(ErrorCode::TooFewSites,
             "protocol needs n >= 2 sites, got " + std::to_string(n));
    ProtocolPlan plan;
    plan.n_sites = n;
    plan.steps.push_back(GateStep::hadamard(1));
    for (int k = 1; k < n; ++k) {
        plan.steps.push_back(GateStep::cnot(k, k + 1));
        plan.steps.push_back(GateStep::x(k + 1));
        plan.steps.push_back(GateStep::hadamard(k + 1));
        plan.block_end.push_back(plan.steps.size());
    }
    return plan;
}

StateVector run_protocol(int n) {
    ProtocolPlan plan = build_plan(n);
    StateVector state = StateVector::all_v(n);
    for (const GateStep &step : plan.steps)
        apply_step(state, step);
    return state;
}

StateVector reference_cluster(int n) {
    if (n < 2)
        fail(ErrorCode::TooFewSites,
             "reference cluster needs n >= 2 sites, got " + std::to_string(n));
    StateVector state = StateVector::zero(n);
    const double mag = std::pow(2.0, -0.5 * n);
    const int h = static_cast<int>(SiteLevel::H);
    const int v = static_cast<int>(SiteLevel::V);
    // Enumerate the 2^n qubit-subspace configurations.
    for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
        std::size_t index = 0;
        std::size_t place = 1;
        for (int site = 1; site <= n; ++site) {
            int level = ((bits >> (site - 1)) & 1) ? v : h;
            index += static_cast<std::size_t>(level) * place;
            place *= 3;
        }
        double sign = 1.0;
        for (int site = 1; site < n; ++site) {
            bool this_h = ((bits >> (site - 1)) & 1) == 0;
            bool next_v = ((bits >> site) & 1) == 1;
            if (this_h && next_v)
                sign = -sign;
        }
        state.at(index) = sign * mag;
    }
    return state;
}

PauliString chain_stabilizer(int n, int site) {
    if (site < 1 || site > n)
        fail(ErrorCode::SiteOutOfRange, "stabilizer site " + std::to_string(site) +
                                            " out of range 1.." + std::to_string(n));
    PauliString p = PauliString::identity(n);
    p.axes[static_cast<std::size_t>(site - 1)] = PauliAxis::X;
    if (site > 1)
        p.axes[static_cast<std::size_t>(site - 2)] = PauliAxis::Z;
    if (site < n)
        p.axes[static_cast<std::size_t>(site)] = PauliAxis::Z;
    return p;
}

} // namespace clustersim
