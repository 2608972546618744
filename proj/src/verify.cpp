#include "verify.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "protocol.hpp"

namespace clustersim {

namespace {

PauliAxis axis_of(PauliBasis basis) {
    switch (basis) {
    case PauliBasis::X:
        return PauliAxis::X;
    case PauliBasis::Y:
        return PauliAxis::Y;
    case PauliBasis::Z:
        return PauliAxis::Z;
    }
    fail(ErrorCode::Internal, "bad Pauli basis");
}

std::size_t pow3(std::size_t n) {
    std::size_t d = 1;
    while (n--)
        d *= 3;
    return d;
}

} // namespace

double fidelity(const StateVector &a, const StateVector &b) {
    return std::norm(inner_product(a, b));
}

double entanglement_entropy(const StateVector &state, const std::vector<int> &left_sites) {
    const int n = state.n_sites();
    std::vector<bool> in_left(static_cast<std::size_t>(n) + 1, false);
    for (int s : left_sites) {
        if (s < 1 || s > n)
            fail(ErrorCode::InvalidPartition,
                 "partition site " + std::to_string(s) + " out of range");
        if (in_left[static_cast<std::size_t>(s)])
            fail(ErrorCode::InvalidPartition, "duplicate partition site " + std::to_string(s));
        in_left[static_cast<std::size_t>(s)] = true;
    }
    const std::size_t n_left = left_sites.size();
    if (n_left == 0 || n_left >= static_cast<std::size_t>(n))
        fail(ErrorCode::InvalidPartition, "left_sites must be a proper nonempty subset");

    std::vector<int> left, right;
    for (int s = 1; s <= n; ++s)
        (in_left[static_cast<std::size_t>(s)] ? left : right).push_back(s);

    Eigen::MatrixXcd m(pow3(left.size()), pow3(right.size()));
    for (std::size_t i = 0; i < state.dim(); ++i) {
        std::size_t row = 0, rp = 1;
        for (int s : left) {
            row += static_cast<std::size_t>(StateVector::digit(i, s)) * rp;
            rp *= 3;
        }
        std::size_t col = 0, cp = 1;
        for (int s : right) {
            col += static_cast<std::size_t>(StateVector::digit(i, s)) * cp;
            cp *= 3;
        }
        m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = state.amplitude(i);
    }

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    double entropy = 0.0;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
        double sv = svd.singularValues()(k);
        if (sv < kTol)
            continue;
        double p = sv * sv;
        entropy -= p * std::log2(p);
    }
    return entropy;
}

std::array<MeasurementBranch, 2> measure_pauli(const StateVector &state, int site,
                                               PauliBasis basis) {
    state.check_site(site);
    double vac_pop = state.site_population(site, SiteLevel::Vac);
    if (vac_pop >= kTol)
        fail(ErrorCode::VacPopulated, "site " + std::to_string(site) +
                                          " has VAC population " + std::to_string(vac_pop));
    const Mat3 &pauli = pauli_matrix(axis_of(basis));

    std::array<MeasurementBranch, 2> branches = {
        MeasurementBranch{MeasurementRecord{site, basis, +1, 0.0}, state},
        MeasurementBranch{MeasurementRecord{site, basis, -1, 0.0}, state},
    };
    for (MeasurementBranch &branch : branches) {
        // (I +- P)/2 on the qubit block, zero on VAC.
        Mat3 proj;
        const double o = branch.record.outcome;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                proj[static_cast<std::size_t>(r * 3 + c)] =
                    0.5 * ((r == c ? 1.0 : 0.0) + o * pauli[static_cast<std::size_t>(r * 3 + c)]);
        proj[0] = 0.0;
        branch.state.apply_site_matrix(site, proj, /*require_unitary=*/false);
        branch.record.probability = branch.state.norm_sq();
        if (branch.record.probability > kTol)
            branch.state.renormalize();
    }
    return branches;
}

double bell_extraction_min_entropy(int n) {
    if (n < 3)
        fail(ErrorCode::TooFewSites,
             "bell extraction needs n >= 3 (no interior sites for n = " + std::to_string(n) + ")");
    const StateVector cluster = run_protocol(n);
    const int interior = n - 2;
    double min_entropy = std::numeric_limits<double>::infinity();
    for (std::size_t mask = 0; mask < (std::size_t{1} << interior); ++mask) {
        StateVector branch = cluster;
        bool reachable = true;
        for (int j = 0; j < interior; ++j) {
            int outcome_slot = ((mask >> j) & 1) ? 1 : 0;
            auto outcomes = measure_pauli(branch, j + 2, PauliBasis::X);
            if (outcomes[static_cast<std::size_t>(outcome_slot)].record.probability <= kTol) {
                reachable = false;
                break;
            }
            branch = outcomes[static_cast<std::size_t>(outcome_slot)].state;
        }
        if (!reachable)
            continue;
        min_entropy = std::min(min_entropy, entanglement_entropy(branch, {1}));
    }
    return min_entropy;
}

bool bell_extraction_check(int n) {
    return bell_extraction_min_entropy(n) >= 1.0 - 1e-9;
}

namespace {

bool fully_product(const StateVector &state) {
    for (int s = 1; s <= state.n_sites(); ++s)
        if (entanglement_entropy(state, {s}) >= 1e-9)
            return false;
    return true;
}

bool all_branches_product(const StateVector &state, const std::vector<int> &sites,
                          const std::vector<PauliBasis> &bases, std::size_t depth) {
    if (depth == sites.size())
        return fully_product(state);
    auto outcomes = measure_pauli(state, sites[depth], bases[depth]);
    for (const MeasurementBranch &branch : outcomes) {
        if (branch.record.probability <= kTol)
            continue;
        if (!all_branches_product(branch.state, sites, bases, depth + 1))
            return false;
    }
    return true;
}

} // namespace

int persistency_upper_bound(int n) {
    if (n < 2 || n > 4)
        fail(ErrorCode::InvalidArgument,
             "persistency search is a brute-force diagnostic limited to 2 <= n <= 4");
    const StateVector cluster = run_protocol(n);
    const std::array<PauliBasis, 3> all_bases = {PauliBasis::X, PauliBasis::Y, PauliBasis::Z};
    for (int k = 0; k <= n; ++k) {
        // every size-k site subset
        std::vector<int> pick(static_cast<std::size_t>(k));
        std::function<bool(int, int)> subsets = [&](int start, int depth) -> bool {
            if (depth == k) {
                std::vector<PauliBasis> bases(static_cast<std::size_t>(k));
                std::function<bool(int)> assign = [&](int d) -> bool {
                    if (d == k)
                        return all_branches_product(cluster, pick, bases, 0);
                    for (PauliBasis b : all_bases) {
                        bases[static_cast<std::size_t>(d)] = b;
                        if (assign(d + 1))
                            return true;
                    }
                    return false;
                };
                return assign(0);
            }
            for (int s = start; s <= n; ++s) {
                pick[static_cast<std::size_t>(depth)] = s;
                if (subsets(s + 1, depth + 1))
                    return true;
            }
            return false;
        };
        if (subsets(1, 0))
            return k;
    }
    fail(ErrorCode::Internal, "persistency search exhausted without disentangling");
}

} // namespace clustersim
