#pragma once

#include "state.hpp"

namespace clustersim {

enum class GateKind { Prepare, Hadamard, X, Cnot };

// One protocol instruction. CNOT stores (control, target) in (site_a,
// site_b); single-site kinds use site_a only. PREPARE resets the whole
// register to |v...v>.
struct GateStep {
    GateKind kind;
    int site_a = 0;
    int site_b = 0;

    static GateStep prepare() { return {GateKind::Prepare, 0, 0}; }
    static GateStep hadamard(int site) { return {GateKind::Hadamard, site, 0}; }
    static GateStep x(int site) { return {GateKind::X, site, 0}; }
    static GateStep cnot(int control, int target) { return {GateKind::Cnot, control, target}; }
};

// Hadamard-type pulse on the {H, V} block: V -> (H+V)/sqrt2,
// H -> (H-V)/sqrt2, identity on VAC. Note this is a rotation (Z times the
// symmetric Hadamard), not an involution: applying it twice maps
// H -> -V, V -> H.
const Mat3 &hadamard_matrix();
// H <-> V swap, VAC fixed.
const Mat3 &x_matrix();
// Sign flip on V, VAC and H fixed.
const Mat3 &z_matrix();

void apply_hadamard(StateVector &state, int site);
void apply_x(StateVector &state, int site);
void apply_z(StateVector &state, int site);

// Control fires on V (= logical |1>): control V swaps the target's H and V;
// control H or any VAC branch is left alone. Real, phase-free completion.
void apply_cnot(StateVector &state, int control, int target);

void apply_step(StateVector &state, const GateStep &step);

} // namespace clustersim
