#include "calderon/measurement.hpp"

#include "calderon/rng.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace calderon {

namespace {

Eigen::MatrixXd normal_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols)
{
    Eigen::MatrixXd g(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = rng.normal();
    return g;
}

} // namespace

ElectrodeLayout::ElectrodeLayout(int P) : P_(P)
{
    if (P < 1) throw std::invalid_argument("ElectrodeLayout: need at least one electrode");
}

double ElectrodeLayout::arc_length() const noexcept { return 2.0 * std::numbers::pi / P_; }
double ElectrodeLayout::normalizer() const noexcept { return 1.0 / std::sqrt(arc_length()); }
double ElectrodeLayout::arc_start(int p) const noexcept { return 2.0 * std::numbers::pi * p / P_; }
double ElectrodeLayout::arc_end(int p) const noexcept { return 2.0 * std::numbers::pi * (p + 1) / P_; }

double ElectrodeLayout::gram(int p, int q) const noexcept
{
    return p == q ? normalizer() * normalizer() * arc_length() : 0.0;
}

double electrode_basis_coeff(BasisIndex j, int p, const ElectrodeLayout& layout)
{
    if (p < 0 || p >= layout.P()) throw std::out_of_range("electrode_basis_coeff: electrode index");
    if (j.k() == 0) return 1.0 / std::sqrt(static_cast<double>(layout.P()));
    const int n = j.mode();
    const double a = layout.arc_start(p), b = layout.arc_end(p);
    const double primitive = j.parity() == Parity::cosine
        ? std::sin(n * b) - std::sin(n * a)
        : std::cos(n * a) - std::cos(n * b);
    return layout.normalizer() * primitive / (n * std::sqrt(std::numbers::pi));
}

Eigen::MatrixXd electrode_coefficients(const ElectrodeLayout& layout, int j_from, int j_to)
{
    Eigen::MatrixXd A(std::max(0, j_to - j_from + 1), layout.P());
    for (int j = j_from; j <= j_to; ++j)
        for (int p = 0; p < layout.P(); ++p) A(j - j_from, p) = electrode_basis_coeff(BasisIndex(j), p, layout);
    return A;
}

SpectralData synth_spectral(const OperatorMatrix& lambda, double eps, std::uint64_t seed)
{
    if (!(eps >= 0.0)) throw std::invalid_argument("synth_spectral: eps must be nonnegative");
    Rng rng(seed);
    SpectralData d;
    d.Y = lambda.entries() + eps * normal_matrix(rng, lambda.J(), lambda.K());
    d.eps = eps;
    d.r = lambda.r();
    d.seed = seed;
    return d;
}

ElectrodeData synth_electrode(const OperatorMatrix& lambda_r0, double eps, const ElectrodeLayout& layout,
                              std::uint64_t seed)
{
    if (lambda_r0.r() != 0.0) throw std::invalid_argument("synth_electrode: DtN matrix must be at r = 0");
    if (lambda_r0.J() != lambda_r0.K()) throw std::invalid_argument("synth_electrode: need a square window");
    const int n = lambda_r0.J();
    const Eigen::MatrixXd A = electrode_coefficients(layout, 1, n);

    ElectrodeData d{Eigen::MatrixXd(), eps, layout, seed};
    Rng rng(seed);
    d.Y = A.transpose() * lambda_r0.entries() * A + eps * normal_matrix(rng, layout.P(), layout.P());

    const int shell = std::max(1, n - 1);
    const auto& t = lambda_r0.entries();
    d.tail_estimate = std::max(t.bottomRows(n - shell + 1).cwiseAbs().maxCoeff(),
                               t.rightCols(n - shell + 1).cwiseAbs().maxCoeff());
    d.truncation_warning = d.tail_estimate > 1e-6;
    return d;
}

ElectrodeData synth_electrode(const ForwardSolver& solver, const TriangleConductivity& gamma, double eps,
                              const ElectrodeLayout& layout, std::uint64_t seed, int j_int)
{
    if (j_int <= 0) j_int = 8 * layout.P();
    return synth_electrode(solver.assemble(gamma, j_int, j_int, 0.0), eps, layout, seed);
}

double ConvertedSpectralData::covariance_deviation() const
{
    double dev = 0.0;
    for (Eigen::Index j = 0; j < gram_rows.rows(); ++j)
        for (Eigen::Index l = 0; l < gram_rows.cols(); ++l)
            for (Eigen::Index k = 0; k < gram_cols.rows(); ++k)
                for (Eigen::Index m = 0; m < gram_cols.cols(); ++m) {
                    const double target = (j == l && k == m) ? 1.0 : 0.0;
                    dev = std::max(dev, std::abs(gram_rows(j, l) * gram_cols(k, m) - target));
                }
    return dev;
}

ConvertedSpectralData electrode_to_spectral(const ElectrodeData& data, int J, int K)
{
    if (J < 1 || K < 1) throw std::invalid_argument("electrode_to_spectral: J and K must be positive");
    const Eigen::MatrixXd AJ = electrode_coefficients(data.layout, 1, J);
    const Eigen::MatrixXd AK = electrode_coefficients(data.layout, 1, K);
    ConvertedSpectralData out;
    out.data.Y = AJ * data.Y * AK.transpose();
    out.data.eps = data.eps;
    out.data.r = 0.0;
    out.data.seed = data.seed;
    out.data.correlated_noise = true;
    out.gram_rows = AJ * AJ.transpose();
    out.gram_cols = AK * AK.transpose();
    return out;
}

ContinuousObservation ContinuousObservation::from_operator(const OperatorMatrix& lambda_r0, double eps,
                                                           std::uint64_t seed)
{
    if (lambda_r0.r() != 0.0) throw std::invalid_argument("ContinuousObservation: DtN matrix must be at r = 0");
    const int n = std::max(lambda_r0.J(), lambda_r0.K());
    ContinuousObservation obs{Eigen::MatrixXd::Zero(n + 1, n + 1), eps, seed};
    obs.lambda.block(1, 1, lambda_r0.J(), lambda_r0.K()) = lambda_r0.entries();
    return obs;
}

Eigen::MatrixXd ContinuousObservation::noise_block() const
{
    Rng rng(seed, 0);
    return normal_matrix(rng, lambda.rows(), lambda.cols());
}

ElectrodeData spectral_to_electrode(const ContinuousObservation& obs, const ElectrodeLayout& layout)
{
    const int P = layout.P();
    const Eigen::MatrixXd A = electrode_coefficients(layout, 0, obs.n());
    ElectrodeData d{Eigen::MatrixXd(), obs.eps, layout, obs.seed};
    d.Y = A.transpose() * obs.lambda * A;
    if (obs.eps == 0.0) return d;

    d.Y += obs.eps * (A.transpose() * obs.noise_block() * A);

    // remainder with covariance I - B (x) B, B = A^T A
    const Eigen::MatrixXd B = A.transpose() * A;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(B);
    const Eigen::MatrixXd& V = eig.eigenvectors();
    const Eigen::VectorXd b = eig.eigenvalues().cwiseMax(0.0).cwiseMin(1.0);
    Eigen::MatrixXd S(P, P);
    for (int i = 0; i < P; ++i)
        for (int j = 0; j < P; ++j) S(i, j) = std::sqrt(std::max(0.0, 1.0 - b[i] * b[j]));
    Rng rng(obs.seed, 1);
    const Eigen::MatrixXd Z = normal_matrix(rng, P, P);
    const Eigen::MatrixXd R = V * S.cwiseProduct(V.transpose() * Z * V) * V.transpose();
    d.Y += obs.eps * R;
    return d;
}

double kl_divergence(const OperatorMatrix& L1, const OperatorMatrix& L0, double eps)
{
    if (L1.r() != L0.r()) throw std::invalid_argument("kl_divergence: r mismatch");
    if (!(eps > 0.0)) throw std::invalid_argument("kl_divergence: eps must be positive");
    const double d = hs_norm(L1 - L0);
    return 0.5 * d * d / (eps * eps);
}

double two_point_risk_bound(double mu)
{
    if (!(mu >= 0.0)) throw std::invalid_argument("two_point_risk_bound: mu must be nonnegative");
    return (1.0 - (mu + std::sqrt(2.0 * mu)) / std::numbers::ln2) / 3.0;
}

} // namespace calderon
