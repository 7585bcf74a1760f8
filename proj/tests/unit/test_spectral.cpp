#include "calderon/forward.hpp"
#include "calderon/spectral.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace calderon;

namespace {

constexpr double pi = std::numbers::pi;

Eigen::MatrixXd random_matrix(int J, int K, unsigned seed)
{
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> n;
    Eigen::MatrixXd m(J, K);
    for (int j = 0; j < J; ++j)
        for (int k = 0; k < K; ++k) m(j, k) = n(gen);
    return m;
}

} // namespace

TEST(Eigenvalue, Examples)
{
    EXPECT_EQ(eigenvalue(BasisIndex(0)), 0.0);
    EXPECT_EQ(eigenvalue(BasisIndex(1)), 1.0);
    EXPECT_EQ(eigenvalue(BasisIndex(4)), 4.0);
}

TEST(Eigenvalue, IndexConventionAndMonotone)
{
    EXPECT_EQ(BasisIndex(0).parity(), Parity::constant);
    for (int k = 1; k < 50; ++k) {
        const BasisIndex b(k);
        EXPECT_EQ(b.mode(), (k + 1) / 2);
        EXPECT_EQ(b.parity(), k % 2 ? Parity::cosine : Parity::sine);
        EXPECT_GE(eigenvalue(BasisIndex(k)), eigenvalue(BasisIndex(k - 1)));
    }
    EXPECT_THROW(BasisIndex(-1), std::invalid_argument);
}

TEST(Eigenvalue, WeylScaling)
{
    for (int k = 1; k <= 200; ++k) {
        const double ratio = eigenvalue(BasisIndex(k)) / (double(k) * k);
        EXPECT_GE(ratio, 0.2) << k;
        EXPECT_LE(ratio, 1.0) << k;
    }
}

TEST(BasisEval, Examples)
{
    EXPECT_NEAR(basis_eval(BasisIndex(0), 1.3), 1.0 / std::sqrt(2 * pi), 1e-15);
    EXPECT_NEAR(basis_eval(BasisIndex(0), 1.3), 0.39894, 1e-5);
    EXPECT_NEAR(basis_eval(BasisIndex(1), 0.0), 0.56419, 1e-5);
    EXPECT_NEAR(basis_eval(BasisIndex(2), 0.0), 0.0, 1e-15);
    EXPECT_NEAR(basis_eval(BasisIndex(6), 0.4), std::sin(3 * 0.4) / std::sqrt(pi), 1e-15);
}

TEST(BasisEval, Orthonormal)
{
    // the trapezoid rule with N points is exact for trigonometric degree < N
    const int N = 64;
    for (int j = 0; j < 12; ++j) {
        for (int k = 0; k < 12; ++k) {
            double s = 0.0;
            for (int i = 0; i < N; ++i) {
                const double t = 2 * pi * i / N;
                s += basis_eval(BasisIndex(j), t) * basis_eval(BasisIndex(k), t);
            }
            EXPECT_NEAR(s * 2 * pi / N, j == k ? 1.0 : 0.0, 1e-13);
        }
    }
}

TEST(BoundaryFunctionTest, EvaluatesExpansion)
{
    BoundaryFunction f{Eigen::VectorXd::Zero(5)};
    f.coeffs << 1, 2, 0, 0, 3;
    const double t = 0.7;
    const double expected = 1 / std::sqrt(2 * pi) + 2 * std::cos(t) / std::sqrt(pi) + 3 * std::sin(2 * t) / std::sqrt(pi);
    EXPECT_NEAR(f(t), expected, 1e-14);
}

TEST(SobolevNorm, Examples)
{
    EXPECT_NEAR(sobolev_norm(BoundaryFunction::single_mode(3), 1.0), std::sqrt(5.0), 1e-14);
    EXPECT_EQ(sobolev_norm(BoundaryFunction{Eigen::VectorXd::Zero(7)}, 2.0), 0.0);
    EXPECT_NEAR(sobolev_norm(BoundaryFunction::single_mode(1), -1.0), 1.0 / std::sqrt(2.0), 1e-14);
}

TEST(SobolevNorm, QuotientDropsConstant)
{
    BoundaryFunction f{Eigen::VectorXd::Zero(4)};
    f.coeffs << 5, 1, 0, 0;
    EXPECT_NEAR(sobolev_norm(f, 0.0, true), 1.0, 1e-12);
    EXPECT_NEAR(sobolev_norm(f, 0.0), std::sqrt(26.0), 1e-12);
    // L2 norm is the coefficient norm
    EXPECT_NEAR(sobolev_norm(f, 0.0), f.coeffs.norm(), 1e-12);
}

TEST(HsNorm, Examples)
{
    OperatorMatrix e(3, 3, 0.0);
    e(1, 1) = 1.0;
    EXPECT_EQ(hs_norm(e), 1.0);
    EXPECT_EQ(hs_norm(OperatorMatrix(4, 4, 0.0)), 0.0);
    OperatorMatrix t(2, 2, 0.0);
    t(1, 1) = 3;
    t(2, 2) = 4;
    EXPECT_NEAR(hs_norm(t), 5.0, 1e-15);
}

TEST(HsNorm, Parseval)
{
    for (unsigned seed = 0; seed < 5; ++seed) {
        const OperatorMatrix T(random_matrix(7, 5, seed), 0.5);
        const double sq = T.entries().array().square().sum();
        EXPECT_NEAR(hs_norm(T) * hs_norm(T), sq, 1e-12 * sq);
        EXPECT_NEAR(hs_inner(T, T), sq, 1e-12 * sq);
    }
}

TEST(Project, Examples)
{
    OperatorMatrix T(2, 1, 0.0);
    T(1, 1) = 2;
    T(2, 1) = 5;
    const OperatorMatrix P = project(T, 1, 1);
    EXPECT_EQ(P(1, 1), 2.0);
    EXPECT_EQ(P(2, 1), 0.0);
    EXPECT_EQ(hs_norm(project(OperatorMatrix(5, 5, 0.0), 3, 3)), 0.0);
    EXPECT_THROW(project(T, 3, 1), std::invalid_argument);
}

TEST(Project, ContractiveAndIdempotent)
{
    for (unsigned seed = 0; seed < 5; ++seed) {
        const OperatorMatrix T(random_matrix(8, 8, seed), 0.0);
        const OperatorMatrix P = project(T, 3, 5);
        EXPECT_LE(hs_norm(P), hs_norm(T));
        EXPECT_EQ(project(P, 3, 5).entries(), P.entries());
    }
}

TEST(Project, ConcentricTailDecaysFasterThanJToTheMinusFour)
{
    const OperatorMatrix T = analytic_dtn_matrix(2.0, 0.5, 40, 40, 0.0);
    double prev = INFINITY;
    for (int J = 2; J <= 20; ++J) {
        const double tail = hs_norm(T - project(T, J, J));
        EXPECT_LT(tail, prev) << J;
        prev = tail;
    }
    // log-log slope of the tail over J in [4, 16]
    const double t4 = hs_norm(T - project(T, 4, 4));
    const double t16 = hs_norm(T - project(T, 16, 16));
    EXPECT_LT(std::log(t16 / t4) / std::log(4.0), -4.0);
}

TEST(OpNormStar, Examples)
{
    OperatorMatrix T(1, 1, 0.0);
    T(1, 1) = 1.0;
    EXPECT_NEAR(op_norm_star(T), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_EQ(op_norm_star(OperatorMatrix(3, 3, 0.0)), 0.0);
}

TEST(OpNormStar, BoundedByHilbertSchmidt)
{
    for (unsigned seed = 0; seed < 10; ++seed) {
        const OperatorMatrix T(random_matrix(5, 5, seed), 0.0);
        // brute force: weighted matrix, SVD, compare with its Frobenius norm
        Eigen::MatrixXd a(5, 5);
        for (int k = 1; k <= 5; ++k)
            for (int j = 1; j <= 5; ++j)
                a(k - 1, j - 1) = std::pow(1 + eigenvalue(BasisIndex(k)), -0.25) * T(j, k)
                                  * std::pow(1 + eigenvalue(BasisIndex(j)), -0.25);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
        EXPECT_NEAR(op_norm_star(T), svd.singularValues()(0), 1e-12);
        EXPECT_LE(op_norm_star(T), hs_norm_between(T, 0.5, -0.5) + 1e-12);
        EXPECT_NEAR(hs_norm_between(T, 0.5, -0.5), a.norm(), 1e-12);
    }
}

TEST(OpNormStar, IndependentOfStoredIndex)
{
    const OperatorMatrix T(random_matrix(4, 6, 3), 0.0);
    EXPECT_NEAR(op_norm_star(rescale_index(T, 1.5)), op_norm_star(T), 1e-12);
}

TEST(RescaleIndex, Examples)
{
    const OperatorMatrix T(random_matrix(4, 4, 1), 0.0);
    EXPECT_EQ(rescale_index(T, 0.0).entries(), T.entries());

    // phi_1^(2) = phi_1 / 2, so the same operator has coefficient 1/2 at r = 2
    OperatorMatrix e(1, 1, 0.0);
    e(1, 1) = 1.0;
    const OperatorMatrix e2 = rescale_index(e, 2.0);
    EXPECT_DOUBLE_EQ(e2(1, 1), 0.5);
    EXPECT_DOUBLE_EQ(e2.r(), 2.0);
    EXPECT_NEAR(e2.unweighted()(0, 0), 1.0, 1e-15);
}

TEST(RescaleIndex, RoundTrip)
{
    for (unsigned seed = 0; seed < 5; ++seed) {
        const OperatorMatrix T(random_matrix(9, 6, seed), 0.0);
        const OperatorMatrix back = rescale_index(rescale_index(T, 1.0), 0.0);
        EXPECT_LT((back.entries() - T.entries()).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT((rescale_index(T, -0.7).unweighted() - T.unweighted()).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(NormComparison, ProjectedNormsWithUnitConstant)
{
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const int J = 6, K = 9;
    for (int trial = 0; trial < 200; ++trial) {
        const OperatorMatrix T(random_matrix(J, K, 100 + trial), 0.0);
        const double p = u(gen), q = u(gen), r = u(gen), s = u(gen);
        const double lhs = hs_norm_between(T, r, s);
        const double rhs = std::pow(1.0 + J, std::max(p - r, 0.0)) * std::pow(1.0 + K, std::max(s - q, 0.0))
                           * hs_norm_between(T, p, q);
        EXPECT_LE(lhs, rhs * (1 + 1e-12)) << p << ' ' << q << ' ' << r << ' ' << s;
    }
}

TEST(NormComparison, ConcentricTailMonotone)
{
    const OperatorMatrix T = analytic_dtn_matrix(3.0, 0.6, 30, 30, 0.0);
    double prev = INFINITY;
    for (int n = 1; n <= 25; ++n) {
        const double tail = hs_norm_between(T - project(T, n, n + 2), 0.5, -0.5);
        EXPECT_LT(tail, prev);
        prev = tail;
    }
}

TEST(OperatorMatrixTest, ShapeAndIndexMismatchThrow)
{
    EXPECT_THROW(hs_inner(OperatorMatrix(2, 2, 0.0), OperatorMatrix(2, 3, 0.0)), std::invalid_argument);
    EXPECT_THROW(hs_inner(OperatorMatrix(2, 2, 0.0), OperatorMatrix(2, 2, 1.0)), std::invalid_argument);
}
