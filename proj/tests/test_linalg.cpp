#include <doctest.h>

#include <Eigen/QR>
#include <random>

#include "nfbasis/linalg.hpp"
#include "support/oracles.hpp"

using namespace nfbasis;
namespace nt = nfbasis::testing;

TEST_SUITE_BEGIN("linalg");

TEST_CASE("rank of identity") {
    CHECK(rank(RealMatrix(RealMatrix::Identity(3, 3))) == 3);
}

TEST_CASE("rank of the 3x2 worked example") {
    RealMatrix A(3, 2);
    A << 1, 0, 0, 1, 2, 0;
    CHECK(rank(A) == 2);
}

TEST_CASE("rank of a constructed rank-3 5x4 product") {
    std::mt19937_64 rng(11);
    // Orthonormal factors times diag(1,1,1,0)
    RealMatrix U = nt::random_matrix<double>(rng, 5, 4);
    RealMatrix V = nt::random_matrix<double>(rng, 4, 4);
    U = Eigen::HouseholderQR<RealMatrix>(U).householderQ() * RealMatrix::Identity(5, 4);
    V = Eigen::HouseholderQR<RealMatrix>(V).householderQ() * RealMatrix::Identity(4, 4);
    Eigen::Vector4d d(1, 1, 1, 0);
    const RealMatrix M = U * d.asDiagonal() * V.transpose();
    CHECK(rank(M) == 3);
}

TEST_CASE("rank rejects non-finite entries") {
    RealMatrix M = RealMatrix::Identity(2, 2);
    M(0, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(rank(M), InvalidInputError);
}

TEST_CASE("nullspace of the all-ones row") {
    RealMatrix a(1, 5);
    a.setOnes();
    const RealMatrix K = nullspace_basis(a);
    REQUIRE(K.cols() == 4);
    CHECK((K.transpose() * K - RealMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((a * K).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("nullspace of the identity is trivial") {
    CHECK(nullspace_basis(RealMatrix(RealMatrix::Identity(2, 2))).cols() == 0);
}

TEST_CASE("nullspace of the oscillator dimension matrix spans the known kernel") {
    RealMatrix B(3, 5);
    B << 0, 0, 0, 1, 1,
         0, 1, 1, 0, 0,
         1, 0, -1, -2, 0;
    const RealMatrix K = nullspace_basis(B);
    REQUIRE(K.cols() == 2);
    // Same space as the two hand-derived kernel vectors.
    RealMatrix expected(5, 2);
    expected << 1, 2, -1, 0, 1, 0, 0, 1, 0, -1;
    RealMatrix joint(5, 4);
    joint << K, expected;
    CHECK(rank(joint) == 2);
}

TEST_CASE("nullspace columns satisfy the residual bound on random input") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        const auto m = static_cast<Eigen::Index>(2 + rng() % 6);
        const auto n = static_cast<Eigen::Index>(2 + rng() % 6);
        const RealMatrix M = nt::random_matrix<double>(rng, m, n);
        const RealMatrix K = nullspace_basis(M);
        CHECK(rank(M) + K.cols() == n);
        if (K.cols() > 0) {
            CHECK((K.adjoint() * K - RealMatrix::Identity(K.cols(), K.cols()))
                      .cwiseAbs()
                      .maxCoeff() < 1e-12);
            for (Eigen::Index c = 0; c < K.cols(); ++c)
                CHECK((M * K.col(c)).norm() <= 1e-9 * M.norm() * K.col(c).norm());
        }
    }
}

TEST_CASE("complex nullspace uses the plain product") {
    std::mt19937_64 rng(31);
    const ComplexMatrix M = nt::random_matrix<std::complex<double>>(rng, 2, 4);
    const ComplexMatrix K = nullspace_basis(M);
    REQUIRE(K.cols() == 2);
    // M * v is the unconjugated product; the kernel must satisfy it exactly.
    CHECK((M * K).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("hyperplane normal of a single row in the plane") {
    RealMatrix rows(1, 2);
    rows << 1, 0;
    const auto s = hyperplane_normal(rows);
    REQUIRE(s.has_value());
    CHECK(std::abs((*s)(0)) < 1e-14);
    CHECK(std::abs(std::abs((*s)(1)) - 1.0) < 1e-14);
}

TEST_CASE("hyperplane normal absent for full-rank rows") {
    RealMatrix rows(2, 2);
    rows << 1, 0, 0, 1;
    CHECK_FALSE(hyperplane_normal(rows).has_value());
}

TEST_CASE("hyperplane normal matches the exact rational oracle") {
    // Two integer rows in R^3; the oracle eliminates exactly over Q.
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        nt::RatMatrix rows_q(2, std::vector<nt::Rat>(3));
        RealMatrix rows(2, 3);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 3; ++j) {
                const int c = coeff(rng);
                rows_q[i][j] = c;
                rows(i, j) = c;
            }
        const auto kernel_q = nt::rational_nullspace(rows_q);
        if (kernel_q.size() != 1)
            continue; // rows were dependent; not a hyperplane
        const auto s = hyperplane_normal(rows);
        REQUIRE(s.has_value());
        CHECK((rows * *s).cwiseAbs().maxCoeff() <= 1e-9 * rows.norm() * s->norm());
        RealVector oracle(3);
        for (int j = 0; j < 3; ++j)
            oracle(j) = nt::rat_to_double(kernel_q[0][j]);
        // Equal up to scale: the cross of the two directions vanishes.
        const double cosine = std::abs(oracle.dot(*s)) / (oracle.norm() * s->norm());
        CHECK(cosine == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("independence tracker accepts a first vector and rejects collinear ones") {
    IndependenceTracker<double> tracker(3);
    RealVector e1 = RealVector::Zero(3);
    e1(0) = 1;
    CHECK(tracker.try_extend(e1));
    CHECK_FALSE(tracker.try_extend(RealVector(2 * e1)));
    RealVector v(3);
    v << 1, 1, 0;
    CHECK(tracker.try_extend(v));
    CHECK(tracker.size() == 2);
}

TEST_CASE("independence tracker dimension mismatch") {
    IndependenceTracker<double> tracker(3);
    CHECK_THROWS_AS(tracker.try_extend(RealVector::Zero(2)), InvalidInputError);
}

TEST_CASE("independence tracker never exceeds the ambient dimension") {
    std::mt19937_64 rng(51);
    IndependenceTracker<double> tracker(4);
    for (int i = 0; i < 40; ++i)
        tracker.try_extend(nt::random_vector<double>(rng, 4));
    CHECK(tracker.size() == 4);
}

TEST_CASE("tolerances must be in (0,1)") {
    ToleranceConfig tol;
    tol.rank_rel_tol = 0.0;
    CHECK_THROWS_AS(tol.validate(), InvalidInputError);
    tol.rank_rel_tol = 1.5;
    CHECK_THROWS_AS(tol.validate(), InvalidInputError);
}

TEST_SUITE_END();
