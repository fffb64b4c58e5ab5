#include "dicke/spin_boson.hpp"

#include <cmath>
#include <stdexcept>

namespace dicke {

namespace {

void check_two_j(int two_j) {
    if (two_j < 0) throw std::invalid_argument("two_j must be nonnegative");
}

void check_cutoff(int cutoff) {
    if (cutoff < 0) throw std::invalid_argument("cutoff must be nonnegative");
}

// Exact C(n,k) for n <= 20; C(20,10) = 184756 fits easily in 64 bits.
std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

}  // namespace

RealSymmetricMatrix jz_matrix(int two_j) {
    check_two_j(two_j);
    const int d = two_j + 1;
    Eigen::VectorXd diag(d);
    for (int k = 0; k < d; ++k) {
        diag(k) = -0.5 * two_j + k;  // m = −J + k
    }
    return RealSymmetricMatrix::diagonal(diag);
}

RealSymmetricMatrix jx_matrix(int two_j) {
    check_two_j(two_j);
    const int d = two_j + 1;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    const double jjp1 = 0.25 * two_j * (two_j + 2);  // J(J+1)
    for (int k = 0; k + 1 < d; ++k) {
        const double mval = -0.5 * two_j + k;
        const double amp = 0.5 * std::sqrt(jjp1 - mval * (mval + 1.0));
        m(k, k + 1) = amp;
        m(k + 1, k) = amp;
    }
    return RealSymmetricMatrix(std::move(m));
}

RealSymmetricMatrix jx_squared(int two_j) {
    const RealSymmetricMatrix jx = jx_matrix(two_j);
    return symmetrized_product(jx, jx);
}

RealSymmetricMatrix boson_number(int cutoff) {
    check_cutoff(cutoff);
    Eigen::VectorXd diag(cutoff + 1);
    for (int n = 0; n <= cutoff; ++n) diag(n) = n;
    return RealSymmetricMatrix::diagonal(diag);
}

RealSymmetricMatrix boson_x(int cutoff) {
    check_cutoff(cutoff);
    const int d = cutoff + 1;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    for (int n = 0; n + 1 < d; ++n) {
        const double amp = std::sqrt(n + 1.0);
        m(n, n + 1) = amp;
        m(n + 1, n) = amp;
    }
    return RealSymmetricMatrix(std::move(m));
}

std::vector<SpinSector> sector_decomposition(int n_atoms) {
    if (n_atoms < 1) throw std::invalid_argument("sector_decomposition: n_atoms must be >= 1");
    if (n_atoms > 20) {
        throw std::invalid_argument(
            "sector_decomposition: n_atoms > 20 not supported (exact multiplicities only)");
    }
    std::vector<SpinSector> sectors;
    for (int two_j = n_atoms % 2; two_j <= n_atoms; two_j += 2) {
        const int k = (n_atoms - two_j) / 2;
        const std::uint64_t mult = binomial(n_atoms, k) - binomial(n_atoms, k - 1);
        sectors.push_back(SpinSector{two_j, mult});
    }
    return sectors;
}

RealSymmetricMatrix parity_matrix(const SpinSector& sector, int cutoff) {
    check_cutoff(cutoff);
    check_two_j(sector.two_j);
    const int ds = sector.two_j + 1;
    const int d = (cutoff + 1) * ds;
    Eigen::VectorXd diag(d);
    for (int n = 0; n <= cutoff; ++n) {
        for (int k = 0; k < ds; ++k) {
            // k = m + J is the integer J_z offset
            diag(n * ds + k) = ((n + k) % 2 == 0) ? 1.0 : -1.0;
        }
    }
    return RealSymmetricMatrix::diagonal(diag);
}

}  // namespace dicke
