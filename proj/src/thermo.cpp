#include "dicke/thermo.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace dicke {

namespace {

double logsumexp(const std::vector<double>& terms) {
    if (terms.empty()) throw std::invalid_argument("logsumexp: empty input");
    double mx = terms[0];
    for (double t : terms) mx = std::max(mx, t);
    double s = 0.0;
    for (double t : terms) s += std::exp(t - mx);
    return mx + std::log(s);
}

void check_beta(double beta) {
    if (!(beta > 0)) throw std::invalid_argument("beta must be > 0");
}

RealSymmetricMatrix sector_hamiltonian(const ModelParams& params, const SpinSector& sector,
                                       ModelKind kind, double beta, std::optional<int> cutoff) {
    if (kind == ModelKind::Dicke) {
        if (!cutoff) throw std::invalid_argument("Dicke model requires a boson cutoff");
        return dicke_block(params, sector, *cutoff);
    }
    return effective_spin_block(params, sector, kind, beta);
}

}  // namespace

Spectrum eigensolve(const RealSymmetricMatrix& h, bool want_vectors) {
    if (!h.mat().allFinite()) {
        throw std::invalid_argument("eigensolve: non-finite entries");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        h.mat(), want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigensolve: decomposition failed");
    }
    Spectrum spec;
    spec.eigenvalues = solver.eigenvalues();
    if (want_vectors) spec.eigenvectors = solver.eigenvectors();
    return spec;
}

double log_partition(const Spectrum& spec, double beta) {
    check_beta(beta);
    if (spec.eigenvalues.size() == 0) throw std::invalid_argument("log_partition: empty spectrum");
    const double emin = spec.eigenvalues(0);
    double s = 0.0;
    for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k) {
        s += std::exp(-beta * (spec.eigenvalues(k) - emin));
    }
    return -beta * emin + std::log(s);
}

double model_log_partition(const ModelParams& params, ModelKind kind, double beta,
                           std::optional<int> cutoff) {
    params.validate();
    check_beta(beta);
    std::vector<double> terms;
    for (const SpinSector& sector : sector_decomposition(params.n_atoms)) {
        const auto h = sector_hamiltonian(params, sector, kind, beta, cutoff);
        const auto spec = eigensolve(h, false);
        terms.push_back(std::log(static_cast<double>(sector.multiplicity)) +
                        log_partition(spec, beta));
    }
    return logsumexp(terms);
}

double free_energy_per_atom(const ModelParams& params, ModelKind kind, double beta,
                            std::optional<int> cutoff) {
    return -model_log_partition(params, kind, beta, cutoff) / (beta * params.n_atoms);
}

double gibbs_expectation(const Spectrum& spec, const RealSymmetricMatrix& observable,
                         double beta) {
    check_beta(beta);
    if (!spec.eigenvectors) {
        throw std::invalid_argument("gibbs_expectation: eigenvectors required");
    }
    const Eigen::MatrixXd& v = *spec.eigenvectors;
    if (v.rows() != observable.dim()) {
        throw std::invalid_argument("gibbs_expectation: dimension mismatch");
    }
    const double emin = spec.eigenvalues(0);
    double z = 0.0;
    double acc = 0.0;
    for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k) {
        const double w = std::exp(-beta * (spec.eigenvalues(k) - emin));
        z += w;
        acc += w * v.col(k).dot(observable.mat() * v.col(k));
    }
    return acc / z;
}

int adaptive_cutoff(const ModelParams& params, double beta, double tol, int hard_cap) {
    params.validate();
    check_beta(beta);
    if (!(tol > 0)) throw std::invalid_argument("adaptive_cutoff: tol must be > 0");

    const double l2n = 4.0 * params.lambda * params.lambda * params.n_atoms /
                       (params.omega * params.omega);
    const int m0 = std::max(20, static_cast<int>(std::ceil(l2n)) +
                                    static_cast<int>(std::ceil(10.0 / beta)));

    double f_prev = free_energy_per_atom(params, ModelKind::Dicke, beta, m0);
    for (int m = m0; m <= hard_cap; m += 10) {
        const double f_next = free_energy_per_atom(params, ModelKind::Dicke, beta, m + 10);
        if (std::abs(f_prev - f_next) < tol) return m;
        f_prev = f_next;
    }
    throw std::runtime_error("adaptive_cutoff: no convergence below hard cap " +
                             std::to_string(hard_cap));
}

ThermoPoint thermo_point(const ModelParams& params, ModelKind kind, double beta, double tol) {
    params.validate();
    check_beta(beta);

    std::optional<int> cutoff;
    if (kind == ModelKind::Dicke) cutoff = adaptive_cutoff(params, beta, tol);

    struct SectorData {
        double log_weight;  // ln mult + ln Z_sector
        double energy;      // ⟨H⟩
        double jx2;
        double jz;
        double nphot;
    };
    std::vector<SectorData> data;
    for (const SpinSector& sector : sector_decomposition(params.n_atoms)) {
        const auto h = sector_hamiltonian(params, sector, kind, beta, cutoff);
        const auto spec = eigensolve(h, true);

        SectorData d{};
        d.log_weight = std::log(static_cast<double>(sector.multiplicity)) +
                       log_partition(spec, beta);

        if (kind == ModelKind::Dicke) {
            const int db = *cutoff + 1;
            const auto id_b = RealSymmetricMatrix::identity(db);
            const auto id_s = RealSymmetricMatrix::identity(sector.dim());
            d.jx2 = gibbs_expectation(spec, kron(id_b, jx_squared(sector.two_j)), beta);
            d.jz = gibbs_expectation(spec, kron(id_b, jz_matrix(sector.two_j)), beta);
            d.nphot = gibbs_expectation(spec, kron(boson_number(*cutoff), id_s), beta);
        } else {
            d.jx2 = gibbs_expectation(spec, jx_squared(sector.two_j), beta);
            d.jz = gibbs_expectation(spec, jz_matrix(sector.two_j), beta);
        }
        // ⟨H⟩ from the spectrum directly
        const double emin = spec.eigenvalues(0);
        double z = 0.0, e = 0.0;
        for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k) {
            const double w = std::exp(-beta * (spec.eigenvalues(k) - emin));
            z += w;
            e += w * spec.eigenvalues(k);
        }
        d.energy = e / z;
        data.push_back(d);
    }

    std::vector<double> log_weights;
    log_weights.reserve(data.size());
    for (const auto& d : data) log_weights.push_back(d.log_weight);
    const double ln_z = logsumexp(log_weights);

    const double n = params.n_atoms;
    ThermoPoint pt;
    pt.beta = beta;
    pt.free_energy_per_atom = -ln_z / (beta * n);
    double u = 0.0, jx2 = 0.0, jz = 0.0, nphot = 0.0;
    for (const auto& d : data) {
        const double w = std::exp(d.log_weight - ln_z);
        u += w * d.energy;
        jx2 += w * d.jx2;
        jz += w * d.jz;
        nphot += w * d.nphot;
    }
    pt.internal_energy_per_atom = u / n;
    pt.jx2_per_atom2 = jx2 / (n * n);
    pt.jz_per_atom = jz / n;
    pt.entropy_per_atom = beta * (pt.internal_energy_per_atom - pt.free_energy_per_atom);
    if (pt.entropy_per_atom < 0.0 && pt.entropy_per_atom > -1e-10) pt.entropy_per_atom = 0.0;
    if (kind == ModelKind::Dicke) {
        pt.photon_density = nphot / n;
        pt.cutoff_used = cutoff;
    }
    return pt;
}

}  // namespace dicke
