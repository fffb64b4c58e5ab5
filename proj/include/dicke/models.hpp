#pragma once

#include <string>

#include "dicke/matrix.hpp"
#include "dicke/spin_boson.hpp"

namespace dicke {

enum class ModelKind {
    Dicke,             // full boson + spins
    ExactEffective,    // spin-only, coefficient 1
    ReslenEffective,   // spin-only, coefficient 1 + 2(1−e^{−β})/β
    LibertiZaffino,    // spin-only, coefficient (β/2)coth(β/2)
};

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& name);

struct ModelParams {
    double epsilon = 1.0;  // qubit level splitting
    double lambda = 0.0;   // coupling
    double omega = 1.0;    // photon energy (Dicke builder only)
    int n_atoms = 1;

    void validate() const;
};

// Mean occupation of an isolated unit-energy mode: h(β) = 1/(e^β − 1).
double bose_factor(double beta);

// Temperature-dependent coefficient c(β) of the spin-only models, defined so
// the effective Hamiltonian reads ε J_z − (4λ²/N)·c(β)·J_x².
//   ExactEffective:  1
//   ReslenEffective: 1 + 2/(β(h(β)+1)) = 1 + 2(1−e^{−β})/β
//   LibertiZaffino:  (β/2)coth(β/2)
double coupling_coefficient(ModelKind kind, double beta);

// ε·J_z − (4λ²/N)·c(β)·J_x² on one spin sector.
RealSymmetricMatrix effective_spin_block(const ModelParams& params, const SpinSector& sector,
                                         ModelKind kind, double beta);

// ω·(a†a ⊗ 1) + ε·(1 ⊗ J_z) − (2λ/√N)·((a†+a) ⊗ J_x), boson index outermost.
RealSymmetricMatrix dicke_block(const ModelParams& params, const SpinSector& sector, int cutoff);

}  // namespace dicke
