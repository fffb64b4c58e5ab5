#include "dicke/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace dicke {

RealSymmetricMatrix::RealSymmetricMatrix(Eigen::MatrixXd m) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw std::invalid_argument("RealSymmetricMatrix: matrix must be square, dim >= 1");
    }
    if (!m.allFinite()) {
        throw std::invalid_argument("RealSymmetricMatrix: non-finite entries");
    }
    m_ = 0.5 * (m + m.transpose()).eval();
}

RealSymmetricMatrix RealSymmetricMatrix::diagonal(const Eigen::VectorXd& d) {
    if (d.size() < 1) {
        throw std::invalid_argument("RealSymmetricMatrix::diagonal: empty diagonal");
    }
    return RealSymmetricMatrix(Eigen::MatrixXd(d.asDiagonal()), already_symmetric_tag{});
}

RealSymmetricMatrix RealSymmetricMatrix::zero(int dim) {
    return RealSymmetricMatrix(Eigen::MatrixXd::Zero(dim, dim), already_symmetric_tag{});
}

RealSymmetricMatrix RealSymmetricMatrix::identity(int dim) {
    return RealSymmetricMatrix(Eigen::MatrixXd::Identity(dim, dim), already_symmetric_tag{});
}

RealSymmetricMatrix& RealSymmetricMatrix::operator+=(const RealSymmetricMatrix& o) {
    if (o.dim() != dim()) throw std::invalid_argument("dimension mismatch in +=");
    m_ += o.m_;
    return *this;
}

RealSymmetricMatrix& RealSymmetricMatrix::operator-=(const RealSymmetricMatrix& o) {
    if (o.dim() != dim()) throw std::invalid_argument("dimension mismatch in -=");
    m_ -= o.m_;
    return *this;
}

RealSymmetricMatrix& RealSymmetricMatrix::operator*=(double s) {
    m_ *= s;
    return *this;
}

RealSymmetricMatrix symmetrized_product(const RealSymmetricMatrix& a,
                                        const RealSymmetricMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in product");
    Eigen::MatrixXd p = a.m_ * b.m_;
    p = 0.5 * (p + p.transpose()).eval();
    return RealSymmetricMatrix(std::move(p), RealSymmetricMatrix::already_symmetric_tag{});
}

RealSymmetricMatrix kron(const RealSymmetricMatrix& a, const RealSymmetricMatrix& b) {
    const int da = a.dim();
    const int db = b.dim();
    Eigen::MatrixXd out(static_cast<Eigen::Index>(da) * db, static_cast<Eigen::Index>(da) * db);
    for (int i = 0; i < da; ++i) {
        for (int j = 0; j < da; ++j) {
            out.block(static_cast<Eigen::Index>(i) * db, static_cast<Eigen::Index>(j) * db, db,
                      db) = a(i, j) * b.mat();
        }
    }
    return RealSymmetricMatrix(std::move(out), RealSymmetricMatrix::already_symmetric_tag{});
}

}  // namespace dicke
