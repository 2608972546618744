#include "state.hpp"

#include <cmath>

namespace clustersim {

namespace {

std::size_t pow3(int n) {
    std::size_t d = 1;
    for (int i = 0; i < n; ++i)
        d *= 3;
    return d;
}

} // namespace

SiteLevel site_level_from_int(int value) {
    if (value < 0 || value > 2)
        fail(ErrorCode::InvalidArgument,
             "site level must be 0 (vac), 1 (h) or 2 (v), got " + std::to_string(value));
    return static_cast<SiteLevel>(value);
}

bool is_unitary(const Mat3 &m, double tol) {
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            Complex dot = 0.0;
            for (int k = 0; k < 3; ++k)
                dot += std::conj(m[k * 3 + i]) * m[k * 3 + j];
            if (std::abs(dot - (i == j ? 1.0 : 0.0)) > tol)
                return false;
        }
    }
    return true;
}

StateVector::StateVector(int n_sites) : n_sites_(n_sites), amps_(pow3(n_sites)) {}

StateVector StateVector::basis(const std::vector<SiteLevel> &levels) {
    if (levels.empty())
        fail(ErrorCode::InvalidArity, "basis_state needs at least one site level");
    StateVector s(static_cast<int>(levels.size()));
    std::size_t index = 0;
    std::size_t place = 1;
    for (SiteLevel l : levels) {
        index += static_cast<std::size_t>(l) * place;
        place *= 3;
    }
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::all_v(int n_sites) {
    if (n_sites < 1)
        fail(ErrorCode::InvalidArity, "n_sites must be >= 1");
    return basis(std::vector<SiteLevel>(n_sites, SiteLevel::V));
}

StateVector StateVector::zero(int n_sites) {
    if (n_sites < 1)
        fail(ErrorCode::InvalidArity, "n_sites must be >= 1");
    return StateVector(n_sites);
}

int StateVector::digit(std::size_t index, int site) {
    return static_cast<int>((index / stride(site)) % 3);
}

std::size_t StateVector::stride(int site) { return pow3(site - 1); }

double StateVector::norm_sq() const {
    double s = 0.0;
    for (const Complex &a : amps_)
        s += std::norm(a);
    return s;
}

void StateVector::renormalize() {
    double n2 = norm_sq();
    if (n2 < kTol * kTol)
        fail(ErrorCode::Internal, "cannot renormalize a zero state");
    double inv = 1.0 / std::sqrt(n2);
    for (Complex &a : amps_)
        a *= inv;
}

double StateVector::site_population(int site, SiteLevel level) const {
    check_site(site);
    double s = 0.0;
    int want = static_cast<int>(level);
    for (std::size_t i = 0; i < amps_.size(); ++i)
        if (digit(i, site) == want)
            s += std::norm(amps_[i]);
    return s;
}

void StateVector::check_site(int site) const {
    if (site < 1 || site > n_sites_)
        fail(ErrorCode::SiteOutOfRange,
             "site " + std::to_string(site) + " out of range 1.." + std::to_string(n_sites_));
}

void StateVector::apply_site_matrix(int site, const Mat3 &m, bool require_unitary) {
    check_site(site);
    if (require_unitary && !is_unitary(m))
        fail(ErrorCode::NotUnitary, "site matrix is not unitary within 1e-12");
    const std::size_t st = stride(site);
    const std::size_t block = st * 3;
    for (std::size_t outer = 0; outer < amps_.size(); outer += block) {
        for (std::size_t inner = 0; inner < st; ++inner) {
            const std::size_t i0 = outer + inner;
            const Complex a0 = amps_[i0];
            const Complex a1 = amps_[i0 + st];
            const Complex a2 = amps_[i0 + 2 * st];
            amps_[i0] = m[0] * a0 + m[1] * a1 + m[2] * a2;
            amps_[i0 + st] = m[3] * a0 + m[4] * a1 + m[5] * a2;
            amps_[i0 + 2 * st] = m[6] * a0 + m[7] * a1 + m[8] * a2;
        }
    }
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    if (a.n_sites() != b.n_sites())
        fail(ErrorCode::DimensionMismatch,
             "inner_product: " + std::to_string(a.n_sites()) + " vs " +
                 std::to_string(b.n_sites()) + " sites");
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        s += std::conj(a.amplitude(i)) * b.amplitude(i);
    return s;
}

PauliString PauliString::identity(int n_sites) {
    PauliString p;
    p.axes.assign(static_cast<std::size_t>(n_sites), PauliAxis::I);
    return p;
}

const Mat3 &pauli_matrix(PauliAxis axis) {
    static const Mat3 kI = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    static const Mat3 kX = {1, 0, 0, 0, 0, 1, 0, 1, 0};
    static const Mat3 kY = {Complex(1, 0), 0, 0, 0, 0, Complex(0, -1), 0, Complex(0, 1), 0};
    static const Mat3 kZ = {1, 0, 0, 0, 1, 0, 0, 0, -1};
    switch (axis) {
    case PauliAxis::I:
        return kI;
    case PauliAxis::X:
        return kX;
    case PauliAxis::Y:
        return kY;
    case PauliAxis::Z:
        return kZ;
    }
    fail(ErrorCode::Internal, "bad Pauli axis");
}

double expectation(const StateVector &state, const PauliString &p) {
    if (p.axes.size() != static_cast<std::size_t>(state.n_sites()))
        fail(ErrorCode::DimensionMismatch,
             "Pauli string length " + std::to_string(p.axes.size()) + " vs " +
                 std::to_string(state.n_sites()) + " sites");
    StateVector acted = state;
    for (int site = 1; site <= state.n_sites(); ++site) {
        PauliAxis ax = p.axes[static_cast<std::size_t>(site - 1)];
        if (ax != PauliAxis::I)
            acted.apply_site_matrix(site, pauli_matrix(ax));
    }
    Complex val = inner_product(state, acted) * static_cast<double>(p.sign);
    if (std::abs(val.imag()) >= kTol)
        fail(ErrorCode::Internal, "expectation of Hermitian Pauli string has imaginary part " +
                                      std::to_string(val.imag()));
    return val.real();
}

} // namespace clustersim
