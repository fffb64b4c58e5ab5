#pragma once

#include <optional>

#include "dicke/models.hpp"

namespace dicke {

struct Spectrum {
    Eigen::VectorXd eigenvalues;                  // ascending
    std::optional<Eigen::MatrixXd> eigenvectors;  // orthonormal columns, same order
};

// Full real spectral decomposition of a dense symmetric matrix.
Spectrum eigensolve(const RealSymmetricMatrix& h, bool want_vectors);

// ln Σ_k exp(−β e_k), shifted by the minimum eigenvalue for stability.
double log_partition(const Spectrum& spec, double beta);

// ln Z summed over all spin sectors with multiplicities. Dicke requires a
// boson cutoff; the effective kinds ignore it.
double model_log_partition(const ModelParams& params, ModelKind kind, double beta,
                           std::optional<int> cutoff = std::nullopt);

// f = −ln Z / (βN)
double free_energy_per_atom(const ModelParams& params, ModelKind kind, double beta,
                            std::optional<int> cutoff = std::nullopt);

// Σ_k w_k ⟨v_k|O|v_k⟩ with stable Boltzmann weights.
double gibbs_expectation(const Spectrum& spec, const RealSymmetricMatrix& observable, double beta);

// Smallest cutoff M from the schedule M₀, M₀+10, … with |f(M) − f(M+10)| < tol,
// where M₀ = max(20, ceil(4λ²N/ω²) + ceil(10/β)). Throws past the hard cap.
int adaptive_cutoff(const ModelParams& params, double beta, double tol, int hard_cap = 400);

// All finite-N thermodynamic outputs at one (model, β) point.
struct ThermoPoint {
    double beta = 0;
    double free_energy_per_atom = 0;
    double internal_energy_per_atom = 0;
    double entropy_per_atom = 0;
    double jx2_per_atom2 = 0;  // ⟨J_x²⟩/N², superradiant order parameter
    double jz_per_atom = 0;
    std::optional<double> photon_density;  // ⟨a†a⟩/N, Dicke only
    std::optional<int> cutoff_used;        // Dicke only
};

ThermoPoint thermo_point(const ModelParams& params, ModelKind kind, double beta, double tol);

}  // namespace dicke
