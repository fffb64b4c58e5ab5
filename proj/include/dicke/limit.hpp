#pragma once

#include <optional>

#include "dicke/models.hpp"

namespace dicke {

// Thermodynamic-limit result at one β.
struct LimitPoint {
    double beta = 0;
    double order_parameter = 0;  // m* ≥ 0
    double free_energy = 0;      // f∞ per atom
};

// Root of the gap equation for one effective kind, when it exists.
struct GapSolution {
    ModelKind kind = ModelKind::ExactEffective;
    std::optional<double> beta_c;
    double bracket_width = 0;  // final bisection bracket
};

// Mean-field free energy per atom for the decoupled J_x² interaction:
// f(m) = γm²/4 − (1/β)·ln[2 cosh((β/2)√(ε² + γ²m²))], with γ = 4λ²c(β).
double mf_free_energy(double m, double beta, double epsilon, double gamma);

// Global minimum of f over m ∈ [0, 1]: 401-point pre-scan, then
// golden-section refinement to |Δm| < 1e−10. Returns m* = 0 exactly when no
// interior point beats f(0) − 1e−13.
LimitPoint minimize_mf(double beta, double epsilon, double gamma);

// Solves tanh(βε/2) = ε/(4λ²·c_kind(β)) by bisection on β ∈ [1e−6, 1e6].
// beta_c is absent when the gap function never changes sign (no transition).
GapSolution critical_beta(ModelKind kind, double epsilon, double lambda);

// minimize_mf with γ = 4λ²·c_kind(β).
LimitPoint limit_free_energy(ModelKind kind, double beta, double epsilon, double lambda);

}  // namespace dicke
