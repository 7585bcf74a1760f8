#pragma once

// Conductivities on the unit disk, the parameter classes they are checked
// against, the regular link function and the smooth cutoff.

#include "calderon/grid_field.hpp"

#include <functional>
#include <stdexcept>

namespace calderon {

/// Pointwise conductivity gamma(x, y) for analytic test problems.
using ConductivityFunction = std::function<double(double, double)>;

/// Grid-sampled conductivity with its class metadata: gamma >= m on the disk
/// and gamma == 1 outside the disk of radius support_radius.
struct ConductivityField {
    GridField field;
    double m = 0.0;
    double support_radius = 1.0;

    const Grid& grid() const noexcept { return field.grid(); }
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Phi(t) = m1 + (1 - m1) * log(1 + e^t) / log 2.
///
/// Smooth increasing bijection R -> (m1, inf) with Phi(0) = 1 and
/// sup Phi' = (1 - m1) / log 2.
class LinkFunction {
public:
    explicit LinkFunction(double m1 = 0.5);

    double m1() const noexcept { return m1_; }
    double operator()(double t) const noexcept;
    double derivative(double t) const noexcept;
    /// Throws DomainError for gamma <= m1.
    double inverse(double gamma) const;

    /// Lipschitz constant of Phi on R.
    double lipschitz() const noexcept;
    /// Lipschitz constant of Phi^{-1} on [m, inf), m > m1.
    double inverse_lipschitz(double m) const;

private:
    double m1_;
};

ConductivityField link_apply(const GridField& theta, const LinkFunction& link,
                             double support_radius = 1.0);
GridField link_invert(const ConductivityField& gamma, const LinkFunction& link);

/// Max over disk grid points of |g1 - g2|; throws on grid mismatch.
double sup_distance(const GridField& g1, const GridField& g2);
double sup_distance(const ConductivityField& g1, const ConductivityField& g2);

bool check_membership(const ConductivityField& g, double m, double support_radius);

/// s(t) = e^{-1/t} / (e^{-1/t} + e^{-1/(1-t)}), clamped to 0 for t <= 0 and
/// 1 for t >= 1. Every derivative vanishes at both junctions.
double smooth_step(double t) noexcept;

/// zeta == 1 on |x| <= r0, zeta == 0 on |x| >= r1.
struct CutoffField {
    double inner_radius = 0.5;
    double outer_radius = 0.75;
    GridField values;

    double profile(double radius) const noexcept;
};

CutoffField make_cutoff(double r0, double r1, int grid_n);

// Test conductivities.

/// kappa on |x| < rho, 1 elsewhere.
ConductivityFunction concentric_conductivity(double kappa, double rho);
/// 1 + (kappa - 1) s((rho_out - |x|)/(rho_out - rho_in)): kappa inside rho_in,
/// 1 outside rho_out, smooth in between.
ConductivityFunction smooth_concentric_conductivity(double kappa, double rho_in, double rho_out);
/// Smooth radial bump with peak 1 at (cx, cy) and support radius `radius`.
std::function<double(double, double)> smooth_bump(double cx, double cy, double radius);

ConductivityField sample_conductivity(const ConductivityFunction& gamma, int grid_n, double m,
                                      double support_radius);

} // namespace calderon
