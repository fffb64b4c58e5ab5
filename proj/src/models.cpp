#include "dicke/models.hpp"

#include <cmath>
#include <stdexcept>

namespace dicke {

std::string to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::Dicke: return "Dicke";
        case ModelKind::ExactEffective: return "ExactEffective";
        case ModelKind::ReslenEffective: return "ReslenEffective";
        case ModelKind::LibertiZaffino: return "LibertiZaffino";
    }
    throw std::logic_error("unreachable ModelKind");
}

ModelKind model_kind_from_string(const std::string& name) {
    if (name == "Dicke") return ModelKind::Dicke;
    if (name == "ExactEffective") return ModelKind::ExactEffective;
    if (name == "ReslenEffective") return ModelKind::ReslenEffective;
    if (name == "LibertiZaffino") return ModelKind::LibertiZaffino;
    throw std::invalid_argument("unknown model kind: " + name);
}

void ModelParams::validate() const {
    if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be > 0");
    if (!(omega > 0)) throw std::invalid_argument("omega must be > 0");
    if (!(lambda >= 0)) throw std::invalid_argument("lambda must be >= 0");
    if (n_atoms < 1) throw std::invalid_argument("n_atoms must be >= 1");
}

double bose_factor(double beta) {
    if (!(beta > 0)) throw std::invalid_argument("bose_factor: beta must be > 0");
    return 1.0 / std::expm1(beta);
}

double coupling_coefficient(ModelKind kind, double beta) {
    if (kind == ModelKind::Dicke) {
        throw std::invalid_argument("coupling_coefficient: Dicke is not an effective model");
    }
    if (!(beta > 0)) throw std::invalid_argument("coupling_coefficient: beta must be > 0");
    switch (kind) {
        case ModelKind::ExactEffective:
            return 1.0;
        case ModelKind::ReslenEffective:
            // 1 + 2/(β(h(β)+1)), with h(β)+1 = e^β/(e^β−1) = 1/(1−e^{−β})
            return 1.0 - 2.0 * std::expm1(-beta) / beta;
        case ModelKind::LibertiZaffino: {
            // (β/2)coth(β/2); tanh is exact at both extremes
            const double x = 0.5 * beta;
            return x / std::tanh(x);
        }
        default:
            throw std::logic_error("unreachable ModelKind");
    }
}

RealSymmetricMatrix effective_spin_block(const ModelParams& params, const SpinSector& sector,
                                         ModelKind kind, double beta) {
    params.validate();
    const double c = coupling_coefficient(kind, beta);
    const double g = 4.0 * params.lambda * params.lambda / params.n_atoms;
    RealSymmetricMatrix h = params.epsilon * jz_matrix(sector.two_j);
    if (g * c != 0.0) {
        h -= (g * c) * jx_squared(sector.two_j);
    }
    return h;
}

RealSymmetricMatrix dicke_block(const ModelParams& params, const SpinSector& sector, int cutoff) {
    params.validate();
    if (cutoff < 0) throw std::invalid_argument("dicke_block: cutoff must be >= 0");
    const int db = cutoff + 1;
    const int ds = sector.two_j + 1;
    const RealSymmetricMatrix id_b = RealSymmetricMatrix::identity(db);
    const RealSymmetricMatrix id_s = RealSymmetricMatrix::identity(ds);

    RealSymmetricMatrix h = params.omega * kron(boson_number(cutoff), id_s);
    h += params.epsilon * kron(id_b, jz_matrix(sector.two_j));
    const double g = 2.0 * params.lambda / std::sqrt(static_cast<double>(params.n_atoms));
    if (g != 0.0) {
        h -= g * kron(boson_x(cutoff), jx_matrix(sector.two_j));
    }
    return h;
}

}  // namespace dicke
