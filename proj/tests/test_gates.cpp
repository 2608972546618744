#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "gates.hpp"
#include "rng.hpp"
#include "state.hpp"

using namespace clustersim;

namespace {

const double kS = 1.0 / std::sqrt(2.0);

bool close(Complex a, Complex b, double tol = 1e-12) { return std::abs(a - b) < tol; }

bool states_equal(const StateVector &a, const StateVector &b, double tol = 1e-12) {
    if (a.dim() != b.dim())
        return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!close(a.amplitude(i), b.amplitude(i), tol))
            return false;
    return true;
}

StateVector random_state(int n, RngStream &rng) {
    StateVector s = StateVector::zero(n);
    for (std::size_t i = 0; i < s.dim(); ++i)
        s.at(i) = Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
    s.renormalize();
    return s;
}

ErrorCode code_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const SimError &e) {
        return e.code();
    }
    return static_cast<ErrorCode>(0);
}

} // namespace

TEST_CASE("hadamard pulse maps the logical basis as specified") {
    StateVector v = StateVector::basis({SiteLevel::V});
    apply_hadamard(v, 1);
    CHECK(close(v.amplitude(1), Complex(kS)));
    CHECK(close(v.amplitude(2), Complex(kS)));
    CHECK(close(v.amplitude(0), Complex(0.0)));

    StateVector h = StateVector::basis({SiteLevel::H});
    apply_hadamard(h, 1);
    CHECK(close(h.amplitude(1), Complex(kS)));
    CHECK(close(h.amplitude(2), Complex(-kS)));
}

TEST_CASE("hadamard pulse is a rotation, not an involution") {
    // Two pulses give the 90-degree rotation H -> -V, V -> H.
    StateVector v = StateVector::basis({SiteLevel::V});
    apply_hadamard(v, 1);
    apply_hadamard(v, 1);
    CHECK(close(v.amplitude(1), Complex(1.0)));
    CHECK(close(v.amplitude(2), Complex(0.0)));

    StateVector h = StateVector::basis({SiteLevel::H});
    apply_hadamard(h, 1);
    apply_hadamard(h, 1);
    CHECK(close(h.amplitude(2), Complex(-1.0)));
}

TEST_CASE("hadamard matrix is unitary and leaves VAC alone") {
    CHECK(is_unitary(hadamard_matrix()));
    StateVector vac = StateVector::basis({SiteLevel::Vac});
    apply_hadamard(vac, 1);
    CHECK(close(vac.amplitude(0), Complex(1.0)));
}

TEST_CASE("conjugating X by the pulse gives Z") {
    // B X B^{-1} = Z on the logical block.
    RngStream rng(5, 0);
    for (int trial = 0; trial < 8; ++trial) {
        StateVector s = random_state(1, rng);
        StateVector lhs = s;
        // B^{-1} = B^T for this real rotation: apply via three pulses, using
        // B^4 = -I would be messy, so build the inverse from the adjoint.
        Mat3 inv;
        const Mat3 &m = hadamard_matrix();
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                inv[static_cast<std::size_t>(r * 3 + c)] =
                    std::conj(m[static_cast<std::size_t>(c * 3 + r)]);
        lhs.apply_site_matrix(1, inv);
        apply_x(lhs, 1);
        apply_hadamard(lhs, 1);
        StateVector rhs = s;
        rhs.apply_site_matrix(1, z_matrix());
        REQUIRE(states_equal(lhs, rhs));
    }
}

TEST_CASE("x gate swaps H and V and squares to identity") {
    StateVector h = StateVector::basis({SiteLevel::H});
    apply_x(h, 1);
    CHECK(close(h.amplitude(2), Complex(1.0)));
    apply_x(h, 1);
    CHECK(close(h.amplitude(1), Complex(1.0)));

    StateVector vac = StateVector::basis({SiteLevel::Vac});
    apply_x(vac, 1);
    CHECK(close(vac.amplitude(0), Complex(1.0)));
}

TEST_CASE("x gate fixes the symmetric superposition") {
    StateVector s = StateVector::basis({SiteLevel::V});
    apply_hadamard(s, 1); // (H + V)/sqrt2
    StateVector t = s;
    apply_x(t, 1);
    CHECK(states_equal(s, t));
}

TEST_CASE("cnot acts only when the control is V") {
    // V_c V_t -> V_c H_t, V_c H_t -> V_c V_t, H_c anything fixed.
    StateVector vv = StateVector::basis({SiteLevel::V, SiteLevel::V});
    apply_cnot(vv, 1, 2);
    CHECK(close(vv.amplitude(2 + 3 * 1), Complex(1.0))); // |v h>

    StateVector vh = StateVector::basis({SiteLevel::V, SiteLevel::H});
    apply_cnot(vh, 1, 2);
    CHECK(close(vh.amplitude(2 + 3 * 2), Complex(1.0))); // |v v>

    StateVector hh = StateVector::basis({SiteLevel::H, SiteLevel::H});
    apply_cnot(hh, 1, 2);
    CHECK(close(hh.amplitude(1 + 3 * 1), Complex(1.0)));

    StateVector hv = StateVector::basis({SiteLevel::H, SiteLevel::V});
    apply_cnot(hv, 1, 2);
    CHECK(close(hv.amplitude(1 + 3 * 2), Complex(1.0)));
}

TEST_CASE("cnot squares to identity") {
    RngStream rng(9, 0);
    StateVector s = random_state(2, rng);
    StateVector t = s;
    apply_cnot(t, 1, 2);
    apply_cnot(t, 1, 2);
    CHECK(states_equal(s, t));
}

TEST_CASE("cnot leaves VAC branches alone") {
    StateVector s = StateVector::basis({SiteLevel::Vac, SiteLevel::V});
    apply_cnot(s, 1, 2);
    CHECK(close(s.amplitude(0 + 3 * 2), Complex(1.0)));

    StateVector t = StateVector::basis({SiteLevel::V, SiteLevel::Vac});
    apply_cnot(t, 1, 2);
    CHECK(close(t.amplitude(2 + 3 * 0), Complex(1.0)));
}

TEST_CASE("cnot error paths") {
    StateVector s = StateVector::all_v(2);
    CHECK(code_of([&] { apply_cnot(s, 1, 1); }) == ErrorCode::SameSite);
    CHECK(code_of([&] { apply_cnot(s, 1, 3); }) == ErrorCode::SiteOutOfRange);
    CHECK(code_of([&] { apply_cnot(s, 0, 2); }) == ErrorCode::SiteOutOfRange);
}

TEST_CASE("cnot commutes with gates on a third site") {
    RngStream rng(21, 0);
    StateVector s = random_state(3, rng);
    StateVector ab = s, ba = s;
    apply_cnot(ab, 1, 2);
    apply_hadamard(ab, 3);
    apply_hadamard(ba, 3);
    apply_cnot(ba, 1, 2);
    CHECK(states_equal(ab, ba));
}

TEST_CASE("apply_step dispatches by kind") {
    StateVector s = StateVector::basis({SiteLevel::H, SiteLevel::H});
    apply_step(s, GateStep::prepare());
    CHECK(close(s.amplitude(8), Complex(1.0))); // |v v>

    apply_step(s, GateStep::x(1));
    StateVector hv = StateVector::basis({SiteLevel::H, SiteLevel::V});
    CHECK(states_equal(s, hv));

    apply_step(s, GateStep::x(1));
    apply_step(s, GateStep::cnot(1, 2));
    StateVector vh = StateVector::basis({SiteLevel::V, SiteLevel::H});
    CHECK(states_equal(s, vh));

    StateVector t = StateVector::basis({SiteLevel::V});
    apply_step(t, GateStep::hadamard(1));
    CHECK(close(t.amplitude(1), Complex(kS)));
}
