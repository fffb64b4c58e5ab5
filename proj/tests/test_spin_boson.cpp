#include <cmath>
#include <cstdint>
#include <random>

#include "dicke/spin_boson.hpp"
#include "doctest.h"

using namespace dicke;

TEST_CASE("jz_matrix standard representations") {
    const auto half = jz_matrix(1);
    CHECK(half.dim() == 2);
    CHECK(half(0, 0) == doctest::Approx(-0.5));
    CHECK(half(1, 1) == doctest::Approx(0.5));
    CHECK(half(0, 1) == 0.0);

    const auto scalar = jz_matrix(0);
    CHECK(scalar.dim() == 1);
    CHECK(scalar(0, 0) == 0.0);

    const auto spin1 = jz_matrix(2);
    CHECK(spin1(0, 0) == doctest::Approx(-1.0));
    CHECK(spin1(1, 1) == doctest::Approx(0.0));
    CHECK(spin1(2, 2) == doctest::Approx(1.0));
}

TEST_CASE("jx_matrix ladder amplitudes") {
    const auto half = jx_matrix(1);
    CHECK(half(0, 1) == doctest::Approx(0.5));
    CHECK(half(1, 0) == doctest::Approx(0.5));
    CHECK(half(0, 0) == 0.0);

    // J=1: ½√(J(J+1) − m(m+1)) = 1/√2 at m = −1 and m = 0
    const auto spin1 = jx_matrix(2);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(spin1(0, 1) == doctest::Approx(inv_sqrt2).epsilon(1e-14));
    CHECK(spin1(1, 2) == doctest::Approx(inv_sqrt2).epsilon(1e-14));
    CHECK(spin1(0, 2) == 0.0);
    CHECK(spin1(0, 0) == 0.0);

    CHECK(jx_matrix(0)(0, 0) == 0.0);
}

TEST_CASE("jx_squared by hand for small sectors") {
    const auto half = jx_squared(1);
    CHECK(half(0, 0) == doctest::Approx(0.25));
    CHECK(half(1, 1) == doctest::Approx(0.25));
    CHECK(half(0, 1) == doctest::Approx(0.0));

    // square of the J=1 jx by hand: diag (½, 1, ½), corners ½
    const auto spin1 = jx_squared(2);
    CHECK(spin1(0, 0) == doctest::Approx(0.5));
    CHECK(spin1(1, 1) == doctest::Approx(1.0));
    CHECK(spin1(2, 2) == doctest::Approx(0.5));
    CHECK(spin1(0, 2) == doctest::Approx(0.5));
    CHECK(spin1(0, 1) == doctest::Approx(0.0));

    CHECK(jx_squared(0)(0, 0) == 0.0);
}

TEST_CASE("boson operators on the truncated Fock basis") {
    CHECK(boson_number(0).dim() == 1);
    CHECK(boson_number(0)(0, 0) == 0.0);
    const auto n2 = boson_number(2);
    CHECK(n2(0, 0) == 0.0);
    CHECK(n2(1, 1) == 1.0);
    CHECK(n2(2, 2) == 2.0);
    CHECK(boson_number(5).trace() == doctest::Approx(15.0));

    const auto x1 = boson_x(1);
    CHECK(x1(0, 1) == doctest::Approx(1.0));
    CHECK(x1(0, 0) == 0.0);
    const auto x2 = boson_x(2);
    CHECK(x2(0, 1) == doctest::Approx(1.0));
    CHECK(x2(1, 2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(boson_x(0)(0, 0) == 0.0);
}

TEST_CASE("kron basics and trace property") {
    const auto i6 = kron(RealSymmetricMatrix::identity(2), RealSymmetricMatrix::identity(3));
    CHECK(i6.dim() == 6);
    CHECK((i6.mat() - Eigen::MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff() == 0.0);

    Eigen::VectorXd a(2), b(2);
    a << 1, 2;
    b << 3, 4;
    const auto d = kron(RealSymmetricMatrix::diagonal(a), RealSymmetricMatrix::diagonal(b));
    CHECK(d(0, 0) == 3.0);
    CHECK(d(1, 1) == 4.0);
    CHECK(d(2, 2) == 6.0);
    CHECK(d(3, 3) == 8.0);

    // trace(kron(a,b)) = trace(a)·trace(b), random symmetric inputs
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::MatrixXd ma(3, 3), mb(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                ma(i, j) = dist(rng);
                mb(i, j) = dist(rng);
            }
        RealSymmetricMatrix sa(ma), sb(mb);
        const auto k = kron(sa, sb);
        // direct oracle: sum of products of diagonals
        double tr = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) tr += sa(i, i) * sb(j, j);
        CHECK(k.trace() == doctest::Approx(tr).epsilon(1e-12));
    }

    // associativity on dimensions
    const auto abc = kron(kron(RealSymmetricMatrix::identity(2), RealSymmetricMatrix::identity(3)),
                          RealSymmetricMatrix::identity(5));
    CHECK(abc.dim() == 30);
}

TEST_CASE("sector_decomposition multiplicities") {
    const auto n2 = sector_decomposition(2);
    REQUIRE(n2.size() == 2);
    CHECK(n2[0].two_j == 0);
    CHECK(n2[0].multiplicity == 1);
    CHECK(n2[1].two_j == 2);
    CHECK(n2[1].multiplicity == 1);

    const auto n4 = sector_decomposition(4);
    REQUIRE(n4.size() == 3);
    CHECK(n4[0].two_j == 0);
    CHECK(n4[0].multiplicity == 2);
    CHECK(n4[1].two_j == 2);
    CHECK(n4[1].multiplicity == 3);
    CHECK(n4[2].two_j == 4);
    CHECK(n4[2].multiplicity == 1);

    const auto n1 = sector_decomposition(1);
    REQUIRE(n1.size() == 1);
    CHECK(n1[0].two_j == 1);
    CHECK(n1[0].multiplicity == 1);

    CHECK_THROWS_AS(sector_decomposition(0), std::invalid_argument);
    CHECK_THROWS_AS(sector_decomposition(21), std::invalid_argument);
}

TEST_CASE("dimension sum rule, exact integers up to N=20") {
    for (int n = 1; n <= 20; ++n) {
        std::uint64_t total = 0;
        for (const auto& s : sector_decomposition(n)) {
            total += s.multiplicity * static_cast<std::uint64_t>(s.two_j + 1);
        }
        CHECK(total == (std::uint64_t{1} << n));
    }
}

TEST_CASE("parity matrix") {
    const auto vac = parity_matrix(SpinSector{0, 1}, 0);
    CHECK(vac.dim() == 1);
    CHECK(vac(0, 0) == 1.0);

    const auto pi = parity_matrix(SpinSector{2, 1}, 3);
    for (int i = 0; i < pi.dim(); ++i) {
        CHECK(std::abs(pi(i, i)) == 1.0);
    }
    const Eigen::MatrixXd sq = pi.mat() * pi.mat();
    CHECK((sq - Eigen::MatrixXd::Identity(pi.dim(), pi.dim())).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("Casimir identity up to two_j = 40") {
    for (int two_j = 0; two_j <= 40; ++two_j) {
        const Eigen::MatrixXd jx = jx_matrix(two_j).mat();
        const Eigen::MatrixXd jz = jz_matrix(two_j).mat();
        const Eigen::MatrixXd c = jx * jz - jz * jx;  // = −i J_y, real antisymmetric
        const double jjp1 = 0.25 * two_j * (two_j + 2);
        const Eigen::MatrixXd lhs = jx * jx - c * c + jz * jz;
        const Eigen::MatrixXd rhs = jjp1 * Eigen::MatrixXd::Identity(two_j + 1, two_j + 1);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("jx and jz are traceless for two_j >= 1") {
    for (int two_j = 1; two_j <= 12; ++two_j) {
        CHECK(jx_matrix(two_j).trace() == doctest::Approx(0.0));
        CHECK(jz_matrix(two_j).trace() == doctest::Approx(0.0));
    }
}
