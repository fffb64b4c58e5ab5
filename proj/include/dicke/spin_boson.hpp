#pragma once

#include <cstdint>
#include <vector>

#include "dicke/matrix.hpp"

namespace dicke {

// One total-spin block of the N-qubit space. two_j is twice the total spin J;
// multiplicity counts how many copies of the block appear in (C²)^⊗N.
struct SpinSector {
    int two_j = 0;
    std::uint64_t multiplicity = 1;

    int dim() const { return two_j + 1; }
};

// J_z on the |J,m⟩ basis, m ascending: diag(−J, −J+1, …, +J).
RealSymmetricMatrix jz_matrix(int two_j);

// J_x = (J_+ + J_−)/2 on the same basis; tridiagonal with
// ⟨m+1|J_x|m⟩ = ½√(J(J+1) − m(m+1)).
RealSymmetricMatrix jx_matrix(int two_j);

// J_x·J_x (pentadiagonal).
RealSymmetricMatrix jx_squared(int two_j);

// a†a on the Fock basis truncated at occupation `cutoff`: diag(0, 1, …, cutoff).
RealSymmetricMatrix boson_number(int cutoff);

// a† + a on the truncated Fock basis; ⟨n+1|a†+a|n⟩ = √(n+1).
RealSymmetricMatrix boson_x(int cutoff);

// Total-spin decomposition of N qubits: two_j runs over N mod 2, N mod 2 + 2,
// …, N with multiplicity C(N, (N−two_j)/2) − C(N, (N−two_j)/2 − 1).
// Exact integer arithmetic; refuses n_atoms outside [1, 20].
std::vector<SpinSector> sector_decomposition(int n_atoms);

// Excitation parity (−1)^(n + m + J) on the (cutoff+1)·(two_j+1) product
// basis, boson index outermost. Commutes with every Dicke block.
RealSymmetricMatrix parity_matrix(const SpinSector& sector, int cutoff);

}  // namespace dicke
