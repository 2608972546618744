#include "gates.hpp"

#include <cmath>
#include <utility>

namespace clustersim {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

const Mat3 &hadamard_matrix() {
    // Rows (vac,h,v); column h = (h-v)/sqrt2, column v = (h+v)/sqrt2.
    static const Mat3 m = {1, 0, 0,
                           0, kInvSqrt2, kInvSqrt2,
                           0, -kInvSqrt2, kInvSqrt2};
    return m;
}

const Mat3 &x_matrix() {
    static const Mat3 m = {1, 0, 0, 0, 0, 1, 0, 1, 0};
    return m;
}

const Mat3 &z_matrix() {
    static const Mat3 m = {1, 0, 0, 0, 1, 0, 0, 0, -1};
    return m;
}

void apply_hadamard(StateVector &state, int site) {
    state.apply_site_matrix(site, hadamard_matrix());
}

void apply_x(StateVector &state, int site) {
    state.apply_site_matrix(site, x_matrix());
}

void apply_z(StateVector &state, int site) {
    state.apply_site_matrix(site, z_matrix());
}

void apply_cnot(StateVector &state, int control, int target) {
    state.check_site(control);
    state.check_site(target);
    if (control == target)
        fail(ErrorCode::SameSite, "cnot control and target are both site " +
                                      std::to_string(control));
    const std::size_t ts = StateVector::stride(target);
    const int v = static_cast<int>(SiteLevel::V);
    const int h = static_cast<int>(SiteLevel::H);
    for (std::size_t i = 0; i < state.dim(); ++i) {
        if (StateVector::digit(i, control) == v && StateVector::digit(i, target) == h)
            std::swap(state.at(i), state.at(i + ts));
    }
}

void apply_step(StateVector &state, const GateStep &step) {
    switch (step.kind) {
    case GateKind::Prepare:
        state = StateVector::all_v(state.n_sites());
        return;
    case GateKind::Hadamard:
        apply_hadamard(state, step.site_a);
        return;
    case GateKind::X:
        apply_x(state, step.site_a);
        return;
    case GateKind::Cnot:
        apply_cnot(state, step.site_a, step.site_b);
        return;
    }
    fail(ErrorCode::Internal, "bad gate kind");
}

} // namespace clustersim
