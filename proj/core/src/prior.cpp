#include "calderon/prior.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace calderon {

void MaternSpec::validate() const
{
    if (alpha < 6) throw std::invalid_argument("MaternSpec: alpha must be an integer >= 6");
    if (!(ell > 0.0)) throw std::invalid_argument("MaternSpec: ell must be positive");
    if (!(amplitude >= 0.0)) throw std::invalid_argument("MaternSpec: amplitude must be nonnegative");
    if (n_modes < 8) throw std::invalid_argument("MaternSpec: n_modes must be >= 8");
}

MaternSampler::MaternSampler(MaternSpec spec, int grid_n) : spec_(spec), grid_(grid_n)
{
    spec_.validate();
    const int M = spec_.n_modes;
    const double half_period = 2.0;
    const int nb = 2 * M + 1;

    basis_.resize(grid_n, nb);
    for (int i = 0; i < grid_n; ++i) {
        const double x = grid_.coord(i);
        basis_(i, 0) = 1.0;
        for (int m = 1; m <= M; ++m) {
            const double w = std::numbers::pi * m / half_period;
            basis_(i, 2 * m - 1) = std::cos(w * x);
            basis_(i, 2 * m) = std::sin(w * x);
        }
    }

    const double nu = spec_.nu();
    const double kappa2 = 2.0 * nu / (spec_.ell * spec_.ell);
    auto mode_of = [](int a) { return (a + 1) / 2; };
    Eigen::MatrixXd var(nb, nb);
    double total = 0.0;
    for (int a = 0; a < nb; ++a)
        for (int b = 0; b < nb; ++b) {
            const int m1 = mode_of(a), m2 = mode_of(b);
            const double w1 = std::numbers::pi * m1 / half_period;
            const double w2 = std::numbers::pi * m2 / half_period;
            // weight folds the +-m lattice points onto the nonnegative quadrant
            const double fold = (m1 > 0 ? 2.0 : 1.0) * (m2 > 0 ? 2.0 : 1.0);
            var(a, b) = fold * std::pow(kappa2 + w1 * w1 + w2 * w2, -(nu + 1.0));
            // cos/sin pairs share a lattice point; count each point once
            if ((m1 == 0 || a % 2 == 1) && (m2 == 0 || b % 2 == 1)) total += var(a, b);
        }
    stddev_ = (var * (spec_.amplitude * spec_.amplitude / total)).cwiseSqrt();
}

Eigen::MatrixXd MaternSampler::draw_white(Rng& rng) const
{
    Eigen::MatrixXd z(coeff_dim(), coeff_dim());
    for (Eigen::Index i = 0; i < z.rows(); ++i)
        for (Eigen::Index j = 0; j < z.cols(); ++j) z(i, j) = rng.normal();
    return z;
}

GridField MaternSampler::field(const Eigen::MatrixXd& white) const
{
    // values(ix, iy) = sum_ab basis(ix, a) c_ab basis(iy, b)
    const Eigen::MatrixXd v = basis_ * stddev_.cwiseProduct(white) * basis_.transpose();
    GridField out(grid_);
    for (int iy = 0; iy < grid_.n(); ++iy)
        for (int ix = 0; ix < grid_.n(); ++ix) out.at(ix, iy) = v(ix, iy);
    return out;
}

double MaternSampler::center_value(const Eigen::MatrixXd& white) const
{
    const int c = grid_.n() / 2;
    return basis_.row(c) * stddev_.cwiseProduct(white) * basis_.row(c).transpose();
}

GridField sample_base(const MaternSpec& spec, std::uint64_t seed, int grid_n)
{
    MaternSampler sampler(spec, grid_n);
    Rng rng(seed);
    return sampler.field(sampler.draw_white(rng));
}

double prior_scale(double eps, int alpha)
{
    return std::pow(eps, 2.0 / (alpha + 2.0));
}

PriorDraw rescale(const GridField& base, double eps, int alpha, const CutoffField& zeta, std::uint64_t seed)
{
    if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("rescale: eps must lie in (0, 1]");
    if (!(base.grid() == zeta.values.grid())) throw std::invalid_argument("rescale: grid mismatch");
    const double s = prior_scale(eps, alpha);
    PriorDraw d{GridField(base.grid()), eps, seed};
    auto& out = d.theta.values();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * zeta.values.values()[i] * base.values()[i];
    return d;
}

namespace {

// Central difference weights for the a-th derivative, offsets -w..w.
std::vector<double> stencil(int a, double h)
{
    switch (a) {
    case 0: return {1.0};
    case 1: return {-0.5 / h, 0.0, 0.5 / h};
    case 2: return {1.0 / (h * h), -2.0 / (h * h), 1.0 / (h * h)};
    case 3: {
        const double c = 1.0 / (2.0 * h * h * h);
        return {-c, 2 * c, 0.0, -2 * c, c};
    }
    case 4: {
        const double c = 1.0 / (h * h * h * h);
        return {c, -4 * c, 6 * c, -4 * c, c};
    }
    default: throw std::invalid_argument("stencil: unsupported order");
    }
}

double binomial(int n, int k)
{
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

double empirical_sobolev_seminorm(const GridField& field, int order)
{
    if (order < 1 || order > 4) throw std::invalid_argument("empirical_sobolev_seminorm: order must be 1..4");
    const Grid& g = field.grid();
    const double h = g.spacing();
    const int n = g.n();
    const int reach = (order + 1) / 2;

    double sum = 0.0;
    for (int ax = 0; ax <= order; ++ax) {
        const int ay = order - ax;
        const auto sx = stencil(ax, h), sy = stencil(ay, h);
        const int wx = static_cast<int>(sx.size()) / 2, wy = static_cast<int>(sy.size()) / 2;
        const double mult = binomial(order, ax);
        for (int iy = reach; iy < n - reach; ++iy)
            for (int ix = reach; ix < n - reach; ++ix) {
                if (!g.in_disk(ix, iy)) continue;
                double d = 0.0;
                for (int b = -wy; b <= wy; ++b) {
                    if (sy[b + wy] == 0.0) continue;
                    for (int a = -wx; a <= wx; ++a) d += sy[b + wy] * sx[a + wx] * field.at(ix + a, iy + b);
                }
                sum += mult * d * d;
            }
    }
    return std::sqrt(sum * h * h);
}

RescaledPrior::RescaledPrior(MaternSpec spec, int grid_n, double eps, CutoffField zeta)
    : sampler_(spec, grid_n), eps_(eps), scale_(0.0), zeta_(std::move(zeta))
{
    if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("RescaledPrior: eps must lie in (0, 1]");
    if (!(zeta_.values.grid() == sampler_.grid())) throw std::invalid_argument("RescaledPrior: grid mismatch");
    scale_ = prior_scale(eps, spec.alpha);
}

GridField RescaledPrior::theta(const Eigen::MatrixXd& white) const
{
    GridField f = sampler_.field(white);
    auto& v = f.values();
    const auto& z = zeta_.values.values();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= scale_ * z[i];
    return f;
}

double RescaledPrior::center_theta(const Eigen::MatrixXd& white) const
{
    const int c = sampler_.grid().n() / 2;
    return scale_ * zeta_.values.at(c, c) * sampler_.center_value(white);
}

} // namespace calderon
