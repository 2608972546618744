#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace clustersim {

using Complex = std::complex<double>;

// Numerical tolerance for unitarity / normalization checks.
inline constexpr double kTol = 1e-12;

// One ensemble's excitation label. The integer encoding is part of the
// basis-index convention and is fixed: vac=0, h=1, v=2. The logical qubit
// lives on {H, V} with |0> = H, |1> = V; VAC only ever receives population
// through the erasure channel.
enum class SiteLevel : int { Vac = 0, H = 1, V = 2 };

SiteLevel site_level_from_int(int value);

// 3x3 single-site operator, row-major, basis order (vac, h, v).
using Mat3 = std::array<Complex, 9>;

bool is_unitary(const Mat3 &m, double tol = kTol);

// Dense amplitude vector over the 3^n product basis of n three-level sites.
// Basis index i stores site k's level as digit k-1 of i in base 3, site 1
// being the least significant digit (appending a site extends the array
// without reshuffling).
class StateVector {
  public:
    // Computational basis state |levels[0], levels[1], ...>.
    static StateVector basis(const std::vector<SiteLevel> &levels);
    static StateVector all_v(int n_sites);
    // Zero-filled vector; caller fills amplitudes (reference constructor).
    static StateVector zero(int n_sites);

    int n_sites() const { return n_sites_; }
    std::size_t dim() const { return amps_.size(); }

    const std::vector<Complex> &amplitudes() const { return amps_; }
    Complex amplitude(std::size_t index) const { return amps_[index]; }
    Complex &at(std::size_t index) { return amps_[index]; }

    // Level of `site` (1-based) encoded in basis index `index`.
    static int digit(std::size_t index, int site);
    static std::size_t stride(int site);

    double norm_sq() const;
    // Scales to unit norm; Internal error on an (effectively) zero vector.
    void renormalize();

    // Population at `site` of the given level, summed over the rest.
    double site_population(int site, SiteLevel level) const;

    // m applied to the tensor factor of `site`, other sites untouched.
    void apply_site_matrix(int site, const Mat3 &m, bool require_unitary = true);

    void check_site(int site) const;

  private:
    explicit StateVector(int n_sites);

    int n_sites_;
    std::vector<Complex> amps_;
};

// <a|b> with conjugation on a. DimensionMismatch on size mismatch.
Complex inner_product(const StateVector &a, const StateVector &b);

enum class PauliAxis : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

// Per-site Pauli labels with an overall sign. Paulis act on the {H, V}
// subspace only and are the identity on VAC.
struct PauliString {
    std::vector<PauliAxis> axes;
    int sign = +1;

    static PauliString identity(int n_sites);
};

// Re <state|P|state>; asserts the imaginary part is below kTol.
double expectation(const StateVector &state, const PauliString &p);

// 3x3 embedding of a Pauli axis (identity on VAC).
const Mat3 &pauli_matrix(PauliAxis axis);

} // namespace clustersim
