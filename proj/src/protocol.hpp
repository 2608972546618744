#pragma once

#include <vector>

#include "gates.hpp"
#include "state.hpp"

namespace clustersim {

// The chain construction. Starting from |v...v>, site 1 receives one
// Hadamard pulse, then each bond k = 1..n-1 runs the entangling block
//   CNOT(k, k+1); X(k+1); HADAMARD(k+1)
// so every site is rotated exactly once and the X lands on the fresh site.
// Per bond this is W(k+1)*CNOT(k,k+1) with W = X*H, i.e. CZ(k,k+1)*W(k+1):
// the standard controlled-phase growth of a linear cluster chain. The
// output matches the closed-form constructor amplitude-for-amplitude.
struct ProtocolPlan {
    int n_sites = 0;
    std::vector<GateStep> steps;
    // block_end[k-1] = index one past the last step of bond block k.
    // Block 1 owns the leading Hadamard on site 1.
    std::vector<std::size_t> block_end;

    int n_blocks() const { return n_sites - 1; }
    // Steps of bond block k (1-based): [first, last).
    std::pair<std::size_t, std::size_t> block_range(int k) const;
};

// TooFewSites unless n >= 2.
ProtocolPlan build_plan(int n);

// Applies build_plan(n) to |v...v>. VAC population stays identically zero.
StateVector run_protocol(int n);

// Closed-form N-site cluster state, built without gates:
// amplitude(s_1..s_N) = 2^{-N/2} * prod over i<N with s_i = H of z(s_{i+1}),
// z(H) = +1, z(V) = -1, and the factor for i = N is 1. Independent
// cross-check for run_protocol.
StateVector reference_cluster(int n);

// Z_{a-1} X_a Z_{a+1} with boundary factors dropped; unsigned (+1).
PauliString chain_stabilizer(int n, int site);

} // namespace clustersim
