#pragma once

// Noisy measurement models (spectral, electrode, continuous white noise), the
// kernels converting between them, and Gaussian-experiment information bounds.

#include "calderon/forward.hpp"
#include "calderon/spectral.hpp"

#include <Eigen/Dense>

#include <cstdint>

namespace calderon {

/// Y_jk = t_jk + eps g_jk on a J x K window in the H_r basis.
struct SpectralData {
    Eigen::MatrixXd Y;
    double eps = 0.0;
    double r = 0.0;
    std::uint64_t seed = 0;
    /// Set when the noise is not iid (e.g. after an electrode -> spectral map).
    bool correlated_noise = false;

    int J() const noexcept { return static_cast<int>(Y.rows()); }
    int K() const noexcept { return static_cast<int>(Y.cols()); }
};

/// P equal arcs I_p = [2 pi p/P, 2 pi (p+1)/P), p = 0..P-1, with normalized
/// indicators psi_p = c 1_{I_p}, c = (2 pi/P)^{-1/2}.
class ElectrodeLayout {
public:
    explicit ElectrodeLayout(int P);

    int P() const noexcept { return P_; }
    double arc_length() const noexcept;
    double normalizer() const noexcept;
    double arc_start(int p) const noexcept;
    double arc_end(int p) const noexcept;
    /// <psi_p, psi_q>, exact.
    double gram(int p, int q) const noexcept;

private:
    int P_;
};

struct ElectrodeData {
    Eigen::MatrixXd Y;
    double eps = 0.0;
    ElectrodeLayout layout{1};
    std::uint64_t seed = 0;
    /// Largest DtN coefficient in the outermost retained mode shell; large
    /// values mean the spectral truncation inside the synthesis is too short.
    double tail_estimate = 0.0;
    bool truncation_warning = false;
};

/// a_jp = <phi_j, psi_p>, closed form.
double electrode_basis_coeff(BasisIndex j, int p, const ElectrodeLayout& layout);

/// Rows j = j_from..j_to, columns p = 0..P-1.
Eigen::MatrixXd electrode_coefficients(const ElectrodeLayout& layout, int j_from, int j_to);

SpectralData synth_spectral(const OperatorMatrix& lambda, double eps, std::uint64_t seed);

/// Electrode data from a DtN matrix assembled at r = 0 on a square window.
ElectrodeData synth_electrode(const OperatorMatrix& lambda_r0, double eps, const ElectrodeLayout& layout,
                              std::uint64_t seed);
/// Assembles the DtN matrix on j_int modes (default 8P) and synthesizes.
ElectrodeData synth_electrode(const ForwardSolver& solver, const TriangleConductivity& gamma, double eps,
                              const ElectrodeLayout& layout, std::uint64_t seed, int j_int = 0);

/// Result of pushing electrode data through F(u)_jk = sum_pq a_jp a_kq u_pq.
/// The noise covariance is eps^2 (G_J kron G_K) with G = A A^T.
struct ConvertedSpectralData {
    SpectralData data;
    Eigen::MatrixXd gram_rows;
    Eigen::MatrixXd gram_cols;

    /// max over entries of |G_J(j,l) G_K(k,m) - delta_jl delta_km|.
    double covariance_deviation() const;
};

ConvertedSpectralData electrode_to_spectral(const ElectrodeData& data, int J, int K);

/// Continuous observation Y = Lambda + eps W at r = 0, held as the
/// coefficient block on indices 0..n (constant mode included). Functionals
/// beyond the block draw their own Gaussians from the same seed.
struct ContinuousObservation {
    Eigen::MatrixXd lambda; // (n+1) x (n+1), indices 0..n
    double eps = 0.0;
    std::uint64_t seed = 0;

    /// Embeds an r = 0 DtN window (indices 1..J) into a square block.
    static ContinuousObservation from_operator(const OperatorMatrix& lambda_r0, double eps,
                                               std::uint64_t seed);
    int n() const noexcept { return static_cast<int>(lambda.rows()) - 1; }
    /// Noise coefficients on the block, fixed by the seed.
    Eigen::MatrixXd noise_block() const;
};

/// Evaluates the observation on T_pq = psi_p (x) psi_q. The output noise is
/// exactly iid N(0, eps^2): the block part carries covariance B (x) B with
/// B = A^T A and an independent remainder supplies I - B (x) B.
ElectrodeData spectral_to_electrode(const ContinuousObservation& obs, const ElectrodeLayout& layout);

/// (1/2) eps^{-2} ||L1 - L0||^2_{H_r}; throws on r or shape mismatch.
double kl_divergence(const OperatorMatrix& L1, const OperatorMatrix& L0, double eps);

/// (1/3)(1 - (mu + sqrt(2 mu))/log 2).
double two_point_risk_bound(double mu);

} // namespace calderon
