#pragma once

#include <array>
#include <vector>

#include "state.hpp"

namespace clustersim {

enum class PauliBasis { X, Y, Z };

struct MeasurementRecord {
    int site = 0;
    PauliBasis basis = PauliBasis::Z;
    int outcome = +1; // +1 or -1
    double probability = 0.0;
};

struct MeasurementBranch {
    MeasurementRecord record;
    StateVector state;
};

// |<a|b>|^2. Both arguments are expected normalized.
double fidelity(const StateVector &a, const StateVector &b);

// Von Neumann entropy (base 2) of the reduced state over left_sites (1-based,
// proper nonempty subset), via singular values of the reshaped amplitude
// matrix. Singular values below kTol count as exact zeros.
double entanglement_entropy(const StateVector &state, const std::vector<int> &left_sites);

// Both outcome branches of a projective single-site Pauli measurement, Born
// probabilities and renormalized post-states. Deterministic; the site must
// carry no VAC population (VacPopulated otherwise). branches[0] is the +1
// outcome. A zero-probability branch carries a zero state.
std::array<MeasurementBranch, 2> measure_pauli(const StateVector &state, int site,
                                               PauliBasis basis);

// True iff X-measuring the interior sites 2..n-1 of run_protocol(n) leaves
// sites (1, n) with at least 1 ebit across the 1 | rest cut on every one of
// the 2^{n-2} outcome branches (tolerance 1e-9). Needs n >= 3.
bool bell_extraction_check(int n);
// Same walk, reporting the minimum branch entropy encountered.
double bell_extraction_min_entropy(int n);

// Brute-force diagnostic (n <= 4): smallest k such that some choice of k
// sites and per-site Pauli bases disentangles the protocol output into a
// full product state on every outcome branch.
int persistency_upper_bound(int n);

} // namespace clustersim
