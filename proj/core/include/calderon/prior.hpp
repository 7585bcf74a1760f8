#pragma once

// Rescaled Whittle-Matern Gaussian prior on the conductivity grid.

#include "calderon/conductivity.hpp"
#include "calderon/grid_field.hpp"
#include "calderon/rng.hpp"

#include <Eigen/Dense>

#include <cstdint>

namespace calderon {

struct MaternSpec {
    int alpha = 6;
    double ell = 0.4;
    double amplitude = 1.0;
    int n_modes = 32;

    /// Throws std::invalid_argument unless alpha >= 6, ell > 0,
    /// amplitude >= 0 and n_modes >= 8.
    void validate() const;
    /// Matern smoothness nu = alpha - 1 (alpha - d/2 with d = 2).
    double nu() const noexcept { return alpha - 1.0; }
};

/// Truncated random Fourier series on the square [-2, 2]^2 with Matern
/// spectral density (kappa^2 + |w|^2)^{-(nu+1)}, kappa^2 = 2 nu / ell^2,
/// restricted to the conductivity grid on [-1, 1]^2. Pointwise variance is
/// amplitude^2 exactly.
///
/// Draws are linear in a white coefficient matrix Z with iid N(0,1) entries,
/// which is the coordinate system used by pCN.
class MaternSampler {
public:
    MaternSampler(MaternSpec spec, int grid_n);

    const MaternSpec& spec() const noexcept { return spec_; }
    const Grid& grid() const noexcept { return grid_; }
    Eigen::Index coeff_dim() const noexcept { return basis_.cols(); }

    Eigen::MatrixXd draw_white(Rng& rng) const;
    GridField field(const Eigen::MatrixXd& white) const;
    /// Value at the grid center (linear functional of the white coefficients).
    double center_value(const Eigen::MatrixXd& white) const;

private:
    MaternSpec spec_;
    Grid grid_;
    Eigen::MatrixXd basis_; // grid_n x (2 n_modes + 1): 1, cos(w_m x), sin(w_m x)
    Eigen::MatrixXd stddev_;
};

GridField sample_base(const MaternSpec& spec, std::uint64_t seed, int grid_n = 65);

struct PriorDraw {
    GridField theta;
    double eps_used = 0.0;
    std::uint64_t seed = 0;
};

/// eps^{2/(alpha+2)}, the prior shrinkage factor in dimension two.
double prior_scale(double eps, int alpha);

/// theta = eps^{2/(alpha+2)} zeta base. Requires eps in (0, 1].
PriorDraw rescale(const GridField& base, double eps, int alpha, const CutoffField& zeta,
                  std::uint64_t seed = 0);

/// Grid estimate of (integral over the disk of |D^order u|^2)^{1/2} using
/// central differences; order must lie in 1..4.
double empirical_sobolev_seminorm(const GridField& field, int order);

/// The prior on theta in white coordinates: theta(Z) = scale * zeta * field(Z).
class RescaledPrior {
public:
    RescaledPrior(MaternSpec spec, int grid_n, double eps, CutoffField zeta);

    const MaternSampler& sampler() const noexcept { return sampler_; }
    const CutoffField& cutoff() const noexcept { return zeta_; }
    double eps() const noexcept { return eps_; }
    double scale() const noexcept { return scale_; }

    GridField theta(const Eigen::MatrixXd& white) const;
    double center_theta(const Eigen::MatrixXd& white) const;

private:
    MaternSampler sampler_;
    double eps_;
    double scale_;
    CutoffField zeta_;
};

} // namespace calderon
