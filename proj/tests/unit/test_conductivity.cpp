#include "calderon/conductivity.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace calderon;

namespace {

GridField random_smooth_field(int n, unsigned seed, double scale)
{
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> g;
    const double a = g(gen), b = g(gen), c = g(gen), d = g(gen);
    return GridField::from_function(Grid(n), [=](double x, double y) {
        return scale * (a * std::sin(2 * x + b) + c * std::cos(3 * y - d) + a * c * x * y);
    });
}

} // namespace

TEST(GridFieldTest, InterpolationReproducesBilinear)
{
    const GridField f = GridField::from_function(Grid(21), [](double x, double y) { return 1 + 2 * x - y + 0.5 * x * y; });
    EXPECT_NEAR(f.interpolate(0.123, -0.456), 1 + 2 * 0.123 + 0.456 - 0.5 * 0.123 * 0.456, 1e-3);
    EXPECT_NEAR(f.interpolate(0.1, 0.3), 1 + 0.2 - 0.3 + 0.015, 1e-12);
}

TEST(LinkApply, Examples)
{
    const LinkFunction link(0.5);
    const ConductivityField g = link_apply(GridField(Grid(17), 0.0), link);
    for (double v : g.field.values()) EXPECT_DOUBLE_EQ(v, 1.0);
    EXPECT_NEAR(link(-50.0), 0.5, 1e-20);
    EXPECT_GT(link(-20.0), 0.5);
    EXPECT_NEAR(link(-700.0), 0.5, 1e-300);
    EXPECT_TRUE(std::isfinite(link(700.0)));

    // theta = zeta * base vanishes where zeta does, so gamma = 1 there
    const CutoffField z = make_cutoff(0.5, 0.75, 33);
    GridField theta = random_smooth_field(33, 3, 2.0);
    for (std::size_t i = 0; i < theta.values().size(); ++i) theta.values()[i] *= z.values.values()[i];
    const ConductivityField gz = link_apply(theta, link, 0.75);
    const Grid& grid = gz.grid();
    for (int iy = 0; iy < grid.n(); ++iy)
        for (int ix = 0; ix < grid.n(); ++ix)
            if (z.values.at(ix, iy) == 0.0) EXPECT_EQ(gz.field.at(ix, iy), 1.0);
}

TEST(LinkApply, ValuesAboveLowerAsymptote)
{
    const LinkFunction link(0.3);
    // below about -36 the excess over the asymptote is lost to rounding
    for (double t = -30; t <= 40; t += 0.25) {
        EXPECT_GT(link(t), 0.3);
        EXPECT_GT(link.derivative(t), 0.0);
        EXPECT_LE(link.derivative(t), link.lipschitz());
    }
    EXPECT_THROW(LinkFunction(0.0), std::invalid_argument);
    EXPECT_THROW(LinkFunction(1.0), std::invalid_argument);
}

TEST(LinkInvert, Examples)
{
    const LinkFunction link(0.5);
    const ConductivityField one{GridField(Grid(9), 1.0), 0.5, 1.0};
    const GridField zero = link_invert(one, link);
    for (double v : zero.values()) EXPECT_NEAR(v, 0.0, 1e-15);

    const GridField theta = random_smooth_field(33, 5, 3.0);
    const GridField back = link_invert(link_apply(theta, link), link);
    EXPECT_LT(sup_distance(back, theta), 1e-10);
    for (double t : {-20.0, -3.0, 0.0, 0.7, 15.0, 60.0})
        EXPECT_NEAR(link(link.inverse(link(t))), link(t), 1e-10 * link(t));

    ConductivityField bad = one;
    bad.field.at(4, 4) = 0.5;
    EXPECT_THROW(link_invert(bad, link), DomainError);
    EXPECT_THROW(link.inverse(0.2), DomainError);
}

TEST(LinkFunctionTest, LipschitzBounds)
{
    const LinkFunction link(0.5);
    for (unsigned s = 0; s < 20; ++s) {
        const GridField a = random_smooth_field(25, s, 2.0);
        const GridField b = random_smooth_field(25, 100 + s, 2.0);
        const double d_theta = sup_distance(a, b);
        const double d_gamma = sup_distance(link_apply(a, link), link_apply(b, link));
        EXPECT_LE(d_gamma, link.lipschitz() * d_theta * (1 + 1e-12));
    }
    const double m = 0.8;
    const double c = link.inverse_lipschitz(m);
    EXPECT_NEAR(c, 1.0 / link.derivative(link.inverse(m)), 1e-14);
    for (unsigned s = 0; s < 20; ++s) {
        GridField a = random_smooth_field(25, s, 1.0);
        GridField b = random_smooth_field(25, 50 + s, 1.0);
        for (double& v : a.values()) v = m + std::abs(v);
        for (double& v : b.values()) v = m + std::abs(v);
        const ConductivityField ga{a, m, 1.0}, gb{b, m, 1.0};
        EXPECT_LE(sup_distance(link_invert(ga, link), link_invert(gb, link)), c * sup_distance(a, b) * (1 + 1e-12));
    }
    EXPECT_THROW(link.inverse_lipschitz(0.5), DomainError);
}

TEST(SupDistance, Examples)
{
    const Grid grid(41);
    const GridField one(grid, 1.0);
    EXPECT_EQ(sup_distance(one, one), 0.0);
    const auto bump = smooth_bump(0.0, 0.0, 0.5);
    const GridField bumped = GridField::from_function(grid, [&](double x, double y) { return 1.0 + 0.3 * bump(x, y); });
    EXPECT_NEAR(sup_distance(one, bumped), 0.3, 1e-15);
    const GridField a = random_smooth_field(41, 1, 1.0), b = random_smooth_field(41, 2, 1.0);
    EXPECT_EQ(sup_distance(a, b), sup_distance(b, a));
    EXPECT_THROW(sup_distance(GridField(Grid(9)), GridField(Grid(11))), std::invalid_argument);
}

TEST(SupDistance, IgnoresPointsOutsideDisk)
{
    const Grid grid(21);
    GridField a(grid, 1.0);
    a.at(0, 0) = 100.0; // corner, outside the disk
    EXPECT_EQ(sup_distance(a, GridField(grid, 1.0)), 0.0);
}

TEST(CheckMembership, Examples)
{
    const Grid grid(41);
    const ConductivityField one{GridField(grid, 1.0), 0.5, 0.9};
    EXPECT_TRUE(check_membership(one, 1.0, 0.9));
    EXPECT_TRUE(check_membership(one, 0.2, 0.3));

    ConductivityField low = one;
    low.field.at(20, 20) = 0.4;
    EXPECT_FALSE(check_membership(low, 0.5, 0.9));

    ConductivityField edge = one;
    ASSERT_NEAR(grid.coord(39), 0.95, 1e-12);
    edge.field.at(39, 20) = 1.1; // (0.95, 0)
    EXPECT_FALSE(check_membership(edge, 0.5, 0.9));
    const ConductivityField rim = sample_conductivity(
        [](double x, double y) { return std::abs(std::hypot(x, y) - 0.95) < 0.03 ? 1.2 : 1.0; }, 81, 0.5, 0.9);
    EXPECT_FALSE(check_membership(rim, 0.5, 0.9));
    EXPECT_TRUE(check_membership(rim, 0.5, 0.99));
}

TEST(MakeCutoff, Examples)
{
    const double r0 = 0.5, r1 = 0.75;
    const CutoffField z = make_cutoff(r0, r1, 65);
    EXPECT_EQ(z.profile(r0 / 2), 1.0);
    EXPECT_EQ(z.profile((1 + r1) / 2), 0.0);
    EXPECT_NEAR(z.profile((r0 + r1) / 2), 0.5, 1e-15);
    const Grid& grid = z.values.grid();
    for (int iy = 0; iy < grid.n(); ++iy) {
        for (int ix = 0; ix < grid.n(); ++ix) {
            const double rad = std::hypot(grid.coord(ix), grid.coord(iy));
            const double v = z.values.at(ix, iy);
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 1.0);
            if (rad <= r0) EXPECT_EQ(v, 1.0);
            if (rad >= r1) EXPECT_EQ(v, 0.0);
        }
    }
    EXPECT_THROW(make_cutoff(0.75, 0.5, 33), std::invalid_argument);
    EXPECT_THROW(make_cutoff(0.5, 1.0, 33), std::invalid_argument);
    EXPECT_THROW(make_cutoff(0.0, 0.5, 33), std::invalid_argument);
}

TEST(MakeCutoff, FlatAtJunctions)
{
    // difference quotients vanish faster than any power near the junctions
    const CutoffField z = make_cutoff(0.5, 0.75, 9);
    for (double d : {1e-2, 5e-3}) {
        EXPECT_LT((1.0 - z.profile(0.5 + d)) / d, 1e-6);
        EXPECT_LT(z.profile(0.75 - d) / d, 1e-6);
    }
}

TEST(Membership, LinkOfCutoffFieldIsAdmissible)
{
    const LinkFunction link(0.5);
    const CutoffField z = make_cutoff(0.5, 0.75, 49);
    for (unsigned s = 0; s < 20; ++s) {
        GridField theta = random_smooth_field(49, s, 5.0);
        for (std::size_t i = 0; i < theta.values().size(); ++i) theta.values()[i] *= z.values.values()[i];
        EXPECT_TRUE(check_membership(link_apply(theta, link, 0.75), 0.5, 0.75));
    }
}
