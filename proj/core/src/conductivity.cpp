#include "calderon/conductivity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace calderon {

namespace {

double softplus(double t) noexcept
{
    // log(1 + e^t) without overflow for large t
    return t > 0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
}

double logistic(double t) noexcept
{
    return t >= 0 ? 1.0 / (1.0 + std::exp(-t)) : std::exp(t) / (1.0 + std::exp(t));
}

} // namespace

LinkFunction::LinkFunction(double m1) : m1_(m1)
{
    if (!(m1 > 0.0 && m1 < 1.0)) throw std::invalid_argument("LinkFunction: m1 must lie in (0,1)");
}

double LinkFunction::operator()(double t) const noexcept
{
    return m1_ + (1.0 - m1_) * softplus(t) / std::numbers::ln2;
}

double LinkFunction::derivative(double t) const noexcept
{
    return (1.0 - m1_) * logistic(t) / std::numbers::ln2;
}

double LinkFunction::inverse(double gamma) const
{
    if (!(gamma > m1_)) throw DomainError("LinkFunction::inverse: value not above m1");
    const double s = (gamma - m1_) * std::numbers::ln2 / (1.0 - m1_);
    // softplus^{-1}(s) = log(e^s - 1)
    return s > 30.0 ? s + std::log1p(-std::exp(-s)) : std::log(std::expm1(s));
}

double LinkFunction::lipschitz() const noexcept
{
    return (1.0 - m1_) / std::numbers::ln2;
}

double LinkFunction::inverse_lipschitz(double m) const
{
    if (!(m > m1_)) throw DomainError("LinkFunction::inverse_lipschitz: need m > m1");
    // Phi' is increasing, so (Phi^{-1})' is largest at the left end.
    return 1.0 / derivative(inverse(m));
}

ConductivityField link_apply(const GridField& theta, const LinkFunction& link,
                             double support_radius)
{
    ConductivityField out{GridField(theta.grid()), link.m1(), support_radius};
    const auto& src = theta.values();
    auto& dst = out.field.values();
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = link(src[i]);
    return out;
}

GridField link_invert(const ConductivityField& gamma, const LinkFunction& link)
{
    GridField out(gamma.grid());
    const auto& src = gamma.field.values();
    auto& dst = out.values();
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = link.inverse(src[i]);
    return out;
}

double sup_distance(const GridField& g1, const GridField& g2)
{
    if (!(g1.grid() == g2.grid())) throw std::invalid_argument("sup_distance: grid mismatch");
    return (g1 - g2).sup_norm();
}

double sup_distance(const ConductivityField& g1, const ConductivityField& g2)
{
    return sup_distance(g1.field, g2.field);
}

bool check_membership(const ConductivityField& g, double m, double support_radius)
{
    const Grid& grid = g.grid();
    for (int iy = 0; iy < grid.n(); ++iy) {
        for (int ix = 0; ix < grid.n(); ++ix) {
            if (!grid.in_disk(ix, iy)) continue;
            const double v = g.field.at(ix, iy);
            if (!(v >= m)) return false;
            const double x = grid.coord(ix), y = grid.coord(iy);
            if (std::hypot(x, y) > support_radius && std::abs(v - 1.0) > 1e-12) return false;
        }
    }
    return true;
}

double smooth_step(double t) noexcept
{
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / t);
    const double b = std::exp(-1.0 / (1.0 - t));
    return a / (a + b);
}

double CutoffField::profile(double radius) const noexcept
{
    return smooth_step((outer_radius - radius) / (outer_radius - inner_radius));
}

CutoffField make_cutoff(double r0, double r1, int grid_n)
{
    if (!(0.0 < r0 && r0 < r1 && r1 < 1.0))
        throw std::invalid_argument("make_cutoff: need 0 < r0 < r1 < 1");
    CutoffField z{r0, r1, GridField(Grid(grid_n))};
    z.values = GridField::from_function(Grid(grid_n), [&z](double x, double y) {
        return z.profile(std::hypot(x, y));
    });
    return z;
}

ConductivityFunction concentric_conductivity(double kappa, double rho)
{
    return [kappa, rho](double x, double y) { return std::hypot(x, y) < rho ? kappa : 1.0; };
}

ConductivityFunction smooth_concentric_conductivity(double kappa, double rho_in, double rho_out)
{
    if (!(0.0 < rho_in && rho_in < rho_out && rho_out < 1.0))
        throw std::invalid_argument("smooth_concentric_conductivity: need 0 < rho_in < rho_out < 1");
    return [=](double x, double y) {
        return 1.0 + (kappa - 1.0) * smooth_step((rho_out - std::hypot(x, y)) / (rho_out - rho_in));
    };
}

std::function<double(double, double)> smooth_bump(double cx, double cy, double radius)
{
    return [=](double x, double y) {
        return smooth_step(1.0 - std::hypot(x - cx, y - cy) / radius);
    };
}

ConductivityField sample_conductivity(const ConductivityFunction& gamma, int grid_n, double m,
                                      double support_radius)
{
    return {GridField::from_function(Grid(grid_n), gamma), m, support_radius};
}

} // namespace calderon
