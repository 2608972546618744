#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "gates.hpp"
#include "protocol.hpp"
#include "rng.hpp"
#include "state.hpp"

using namespace clustersim;

namespace {

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

TEST_CASE("basis_state places a single unit amplitude") {
    StateVector v = StateVector::basis({SiteLevel::V});
    CHECK(v.amplitude(2) == Complex(1.0));
    CHECK(v.norm_sq() == doctest::Approx(1.0));

    StateVector vv = StateVector::basis({SiteLevel::V, SiteLevel::V});
    CHECK(vv.amplitude(8) == Complex(1.0));

    StateVector vac = StateVector::basis({SiteLevel::Vac});
    CHECK(vac.amplitude(0) == Complex(1.0));
}

TEST_CASE("basis_state rejects an empty level list") {
    CHECK(code_of([] { StateVector::basis({}); }) == ErrorCode::InvalidArity);
}

TEST_CASE("inner products") {
    StateVector h = StateVector::basis({SiteLevel::H});
    StateVector v = StateVector::basis({SiteLevel::V});
    CHECK(inner_product(v, v) == Complex(1.0));
    CHECK(inner_product(h, v) == Complex(0.0));

    StateVector vv = StateVector::basis({SiteLevel::V, SiteLevel::V});
    StateVector cluster = run_protocol(2);
    CHECK(inner_product(vv, cluster).real() == doctest::Approx(0.5).epsilon(1e-12));

    CHECK(code_of([&] { inner_product(h, vv); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("apply_site_matrix basics") {
    const Mat3 identity = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    RngStream rng(7, 0);
    StateVector s = random_state(3, rng);
    StateVector t = s;
    t.apply_site_matrix(2, identity);
    for (std::size_t i = 0; i < s.dim(); ++i)
        CHECK(t.amplitude(i) == s.amplitude(i));

    StateVector h = StateVector::basis({SiteLevel::H});
    h.apply_site_matrix(1, x_matrix());
    CHECK(h.amplitude(2) == Complex(1.0));
}

TEST_CASE("apply then adjoint restores the state") {
    RngStream rng(11, 0);
    StateVector s = random_state(2, rng);
    StateVector t = s;
    const Mat3 &m = hadamard_matrix();
    Mat3 adj;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            adj[static_cast<std::size_t>(r * 3 + c)] =
                std::conj(m[static_cast<std::size_t>(c * 3 + r)]);
    t.apply_site_matrix(1, m);
    t.apply_site_matrix(1, adj);
    for (std::size_t i = 0; i < s.dim(); ++i)
        CHECK(std::abs(t.amplitude(i) - s.amplitude(i)) < 1e-12);
}

TEST_CASE("apply_site_matrix error paths") {
    StateVector s = StateVector::basis({SiteLevel::V});
    CHECK(code_of([&] { s.apply_site_matrix(2, x_matrix()); }) == ErrorCode::SiteOutOfRange);
    CHECK(code_of([&] { s.apply_site_matrix(0, x_matrix()); }) == ErrorCode::SiteOutOfRange);

    const Mat3 not_unitary = {1, 0, 0, 0, 2, 0, 0, 0, 1};
    CHECK(code_of([&] { s.apply_site_matrix(1, not_unitary); }) == ErrorCode::NotUnitary);
    // The same matrix is fine when the unitary flag is off.
    s.apply_site_matrix(1, not_unitary, /*require_unitary=*/false);
}

TEST_CASE("expectation values and the sigma_z convention") {
    StateVector h = StateVector::basis({SiteLevel::H});
    PauliString z = PauliString::identity(1);
    z.axes[0] = PauliAxis::Z;
    CHECK(expectation(h, z) == doctest::Approx(1.0));

    StateVector cluster = run_protocol(2);
    PauliString xz = PauliString::identity(2);
    xz.axes[0] = PauliAxis::X;
    xz.axes[1] = PauliAxis::Z;
    CHECK(expectation(cluster, xz) == doctest::Approx(1.0).epsilon(1e-12));

    PauliString zx = PauliString::identity(2);
    zx.axes[0] = PauliAxis::Z;
    zx.axes[1] = PauliAxis::X;
    CHECK(expectation(cluster, zx) == doctest::Approx(-1.0).epsilon(1e-12));

    StateVector single = StateVector::basis({SiteLevel::H});
    CHECK(code_of([&] { expectation(single, xz); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("all-identity Pauli string has expectation exactly 1") {
    RngStream rng(3, 0);
    for (int n = 1; n <= 4; ++n) {
        StateVector s = random_state(n, rng);
        CHECK(expectation(s, PauliString::identity(n)) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("index round-trip over all basis indices, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        std::size_t dim = 1;
        for (int i = 0; i < n; ++i)
            dim *= 3;
        for (std::size_t index = 0; index < dim; ++index) {
            std::vector<SiteLevel> levels;
            for (int site = 1; site <= n; ++site)
                levels.push_back(site_level_from_int(StateVector::digit(index, site)));
            StateVector s = StateVector::basis(levels);
            REQUIRE(s.amplitude(index) == Complex(1.0));
        }
    }
}

TEST_CASE("norm is preserved across random unitary sequences") {
    RngStream rng(123, 0);
    StateVector s = StateVector::all_v(4);
    for (int step = 0; step < 200; ++step) {
        int site = 1 + static_cast<int>(rng.next_u64() % 4);
        switch (rng.next_u64() % 3) {
        case 0:
            apply_hadamard(s, site);
            break;
        case 1:
            apply_x(s, site);
            break;
        default: {
            int other = 1 + static_cast<int>(rng.next_u64() % 4);
            if (other != site)
                apply_cnot(s, site, other);
            break;
        }
        }
        REQUIRE(std::abs(s.norm_sq() - 1.0) < 1e-12);
    }
}

TEST_CASE("site matrices on disjoint sites commute") {
    RngStream rng(17, 0);
    for (int trial = 0; trial < 10; ++trial) {
        StateVector s = random_state(3, rng);
        StateVector ab = s, ba = s;
        ab.apply_site_matrix(1, hadamard_matrix());
        ab.apply_site_matrix(3, x_matrix());
        ba.apply_site_matrix(3, x_matrix());
        ba.apply_site_matrix(1, hadamard_matrix());
        for (std::size_t i = 0; i < s.dim(); ++i)
            REQUIRE(std::abs(ab.amplitude(i) - ba.amplitude(i)) < 1e-12);
    }
}

TEST_CASE("site_population splits by level") {
    StateVector s = StateVector::basis({SiteLevel::H, SiteLevel::V});
    apply_hadamard(s, 1);
    CHECK(s.site_population(1, SiteLevel::H) == doctest::Approx(0.5));
    CHECK(s.site_population(1, SiteLevel::V) == doctest::Approx(0.5));
    CHECK(s.site_population(1, SiteLevel::Vac) == 0.0);
    CHECK(s.site_population(2, SiteLevel::V) == doctest::Approx(1.0));
}
