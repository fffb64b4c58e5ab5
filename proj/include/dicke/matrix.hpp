#pragma once

#include <Eigen/Dense>

namespace dicke {

// Dense real symmetric operator in a fixed product basis. Every Hamiltonian
// term used here ((a†+a), a†a, J_z, J_x, J_x²) is real in that basis, so a
// single real type serves the whole project.
class RealSymmetricMatrix {
public:
    // Symmetrizes the input exactly: entries (i,j) and (j,i) are averaged.
    explicit RealSymmetricMatrix(Eigen::MatrixXd m);

    static RealSymmetricMatrix diagonal(const Eigen::VectorXd& d);
    static RealSymmetricMatrix zero(int dim);
    static RealSymmetricMatrix identity(int dim);

    int dim() const { return static_cast<int>(m_.rows()); }
    double operator()(int i, int j) const { return m_(i, j); }
    const Eigen::MatrixXd& mat() const { return m_; }

    double trace() const { return m_.trace(); }
    double max_abs() const { return m_.cwiseAbs().maxCoeff(); }

    RealSymmetricMatrix& operator+=(const RealSymmetricMatrix& o);
    RealSymmetricMatrix& operator-=(const RealSymmetricMatrix& o);
    RealSymmetricMatrix& operator*=(double s);

    friend RealSymmetricMatrix operator+(RealSymmetricMatrix a, const RealSymmetricMatrix& b) {
        a += b;
        return a;
    }
    friend RealSymmetricMatrix operator-(RealSymmetricMatrix a, const RealSymmetricMatrix& b) {
        a -= b;
        return a;
    }
    friend RealSymmetricMatrix operator*(double s, RealSymmetricMatrix a) {
        a *= s;
        return a;
    }

private:
    struct already_symmetric_tag {};
    RealSymmetricMatrix(Eigen::MatrixXd m, already_symmetric_tag) : m_(std::move(m)) {}

    Eigen::MatrixXd m_;

    friend RealSymmetricMatrix symmetrized_product(const RealSymmetricMatrix&,
                                                   const RealSymmetricMatrix&);
    friend RealSymmetricMatrix kron(const RealSymmetricMatrix&, const RealSymmetricMatrix&);
};

// Product a·b, symmetrized. Intended for commuting symmetric factors
// (e.g. J_x·J_x); the symmetrization removes roundoff asymmetry only.
RealSymmetricMatrix symmetrized_product(const RealSymmetricMatrix& a,
                                        const RealSymmetricMatrix& b);

// Kronecker product, first factor outermost (slow index).
RealSymmetricMatrix kron(const RealSymmetricMatrix& a, const RealSymmetricMatrix& b);

}  // namespace dicke
