#include "dicke/limit.hpp"

#include <cmath>
#include <stdexcept>

namespace dicke {

namespace {

double log_2cosh(double x) {
    x = std::abs(x);
    return x + std::log1p(std::exp(-2.0 * x));
}

// tanh(βε/2) − ε/(4λ²·c(β)); positive side is the ordered phase
double gap_function(ModelKind kind, double beta, double epsilon, double lambda) {
    const double gamma = 4.0 * lambda * lambda * coupling_coefficient(kind, beta);
    return std::tanh(0.5 * beta * epsilon) - epsilon / gamma;
}

}  // namespace

double mf_free_energy(double m, double beta, double epsilon, double gamma) {
    if (!(beta > 0)) throw std::invalid_argument("mf_free_energy: beta must be > 0");
    if (!(gamma >= 0)) throw std::invalid_argument("mf_free_energy: gamma must be >= 0");
    const double field = std::sqrt(epsilon * epsilon + gamma * gamma * m * m);
    return 0.25 * gamma * m * m - log_2cosh(0.5 * beta * field) / beta;
}

LimitPoint minimize_mf(double beta, double epsilon, double gamma) {
    constexpr int kScanPoints = 401;
    constexpr double kGold = 0.6180339887498949;

    const double f0 = mf_free_energy(0.0, beta, epsilon, gamma);

    int best = 0;
    double f_best = f0;
    for (int i = 1; i < kScanPoints; ++i) {
        const double m = static_cast<double>(i) / (kScanPoints - 1);
        const double f = mf_free_energy(m, beta, epsilon, gamma);
        if (f < f_best) {
            f_best = f;
            best = i;
        }
    }

    LimitPoint pt;
    pt.beta = beta;
    if (best == 0) {
        pt.order_parameter = 0.0;
        pt.free_energy = f0;
        return pt;
    }

    const double h = 1.0 / (kScanPoints - 1);
    double lo = std::max(0.0, (best - 1) * h);
    double hi = std::min(1.0, (best + 1) * h);
    double x1 = hi - kGold * (hi - lo);
    double x2 = lo + kGold * (hi - lo);
    double f1 = mf_free_energy(x1, beta, epsilon, gamma);
    double f2 = mf_free_energy(x2, beta, epsilon, gamma);
    while (hi - lo > 1e-10) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kGold * (hi - lo);
            f1 = mf_free_energy(x1, beta, epsilon, gamma);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kGold * (hi - lo);
            f2 = mf_free_energy(x2, beta, epsilon, gamma);
        }
    }
    const double m_star = 0.5 * (lo + hi);
    const double f_star = mf_free_energy(m_star, beta, epsilon, gamma);
    if (f_star < f0 - 1e-13) {
        pt.order_parameter = m_star;
        pt.free_energy = f_star;
    } else {
        pt.order_parameter = 0.0;
        pt.free_energy = f0;
    }
    return pt;
}

GapSolution critical_beta(ModelKind kind, double epsilon, double lambda) {
    if (kind == ModelKind::Dicke) {
        throw std::invalid_argument("critical_beta: Dicke is not an effective model");
    }
    if (!(epsilon > 0)) throw std::invalid_argument("critical_beta: epsilon must be > 0");
    if (!(lambda >= 0)) throw std::invalid_argument("critical_beta: lambda must be >= 0");

    GapSolution sol;
    sol.kind = kind;
    if (lambda == 0.0) return sol;  // no transition at zero coupling

    constexpr double kBetaMin = 1e-6;
    constexpr double kBetaMax = 1e6;
    constexpr int kScanPoints = 481;

    // sign-bracket detection on a log grid; g < 0 at small β always
    double lo = kBetaMin;
    double hi = 0.0;
    bool bracketed = false;
    const double ratio = std::pow(kBetaMax / kBetaMin, 1.0 / (kScanPoints - 1));
    double prev_beta = kBetaMin;
    double prev_g = gap_function(kind, prev_beta, epsilon, lambda);
    for (int i = 1; i < kScanPoints; ++i) {
        const double b = kBetaMin * std::pow(ratio, i);
        const double g = gap_function(kind, b, epsilon, lambda);
        if (prev_g < 0.0 && g >= 0.0) {
            lo = prev_beta;
            hi = b;
            bracketed = true;
            break;
        }
        prev_beta = b;
        prev_g = g;
    }
    if (!bracketed) return sol;  // no sign change over the whole range

    while (hi - lo > 1e-14 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (gap_function(kind, mid, epsilon, lambda) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double root = 0.5 * (lo + hi);
    if (std::abs(gap_function(kind, root, epsilon, lambda)) >= 1e-10) {
        throw std::runtime_error("critical_beta: bisection residual exceeds 1e-10");
    }
    sol.beta_c = root;
    sol.bracket_width = hi - lo;
    return sol;
}

LimitPoint limit_free_energy(ModelKind kind, double beta, double epsilon, double lambda) {
    if (kind == ModelKind::Dicke) {
        throw std::invalid_argument("limit_free_energy: Dicke is not an effective model");
    }
    const double gamma = 4.0 * lambda * lambda * coupling_coefficient(kind, beta);
    return minimize_mf(beta, epsilon, gamma);
}

}  // namespace dicke
