#include "calderon/conductivity.hpp"
#include "calderon/prior.hpp"
#include "calderon/rng.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace calderon;

TEST(MaternSpecTest, Validation)
{
    EXPECT_NO_THROW(MaternSpec{}.validate());
    EXPECT_THROW((MaternSpec{5, 0.4, 1.0, 32}.validate()), std::invalid_argument);
    EXPECT_THROW((MaternSpec{6, 0.0, 1.0, 32}.validate()), std::invalid_argument);
    EXPECT_THROW((MaternSpec{6, 0.4, -1.0, 32}.validate()), std::invalid_argument);
    EXPECT_THROW((MaternSpec{6, 0.4, 1.0, 7}.validate()), std::invalid_argument);
    EXPECT_EQ(MaternSpec{}.nu(), 5.0);
}

TEST(SampleBase, ZeroAmplitudeGivesZeroField)
{
    const GridField f = sample_base(MaternSpec{6, 0.4, 0.0, 16}, 3, 33);
    EXPECT_EQ(f.sup_norm(), 0.0);
}

TEST(SampleBase, DeterministicAndNondegenerate)
{
    const MaternSpec spec{};
    const GridField a = sample_base(spec, 1, 33), b = sample_base(spec, 1, 33), c = sample_base(spec, 2, 33);
    EXPECT_EQ(a.values(), b.values());
    EXPECT_GT(sup_distance(a, c), 0.0);
}

TEST(SampleBase, CenterVarianceMatchesAmplitude)
{
    const MaternSpec spec{6, 0.4, 1.5, 16};
    const MaternSampler sampler(spec, 33);
    double s = 0, s2 = 0;
    const int n = 2000;
    for (int seed = 0; seed < n; ++seed) {
        Rng rng(seed);
        const Eigen::MatrixXd z = sampler.draw_white(rng);
        const double v = sampler.center_value(z);
        EXPECT_NEAR(v, sampler.field(z).at(16, 16), 1e-12);
        s += v;
        s2 += v * v;
    }
    const double var = s2 / n - (s / n) * (s / n);
    EXPECT_NEAR(var, 2.25, 0.1 * 2.25);
}

TEST(SampleBase, PointwiseVarianceIsExactlyAmplitudeSquared)
{
    // the field is linear in N(0, I) coefficients: variance = sum of squared responses
    const MaternSpec spec{6, 0.4, 1.0, 8};
    const MaternSampler sampler(spec, 17);
    const Eigen::Index d = sampler.coeff_dim();
    for (auto [ix, iy] : {std::pair{8, 8}, std::pair{3, 12}, std::pair{0, 16}}) {
        double var = 0.0;
        for (Eigen::Index a = 0; a < d; ++a)
            for (Eigen::Index b = 0; b < d; ++b) {
                Eigen::MatrixXd e = Eigen::MatrixXd::Zero(d, d);
                e(a, b) = 1.0;
                const double v = sampler.field(e).at(ix, iy);
                var += v * v;
            }
        EXPECT_NEAR(var, 1.0, 1e-12);
    }
}

TEST(SampleBase, SmoothDrawsHaveFiniteFourthOrderSeminorm)
{
    const GridField f = sample_base(MaternSpec{}, 4, 65);
    const double s4 = empirical_sobolev_seminorm(f, 4);
    EXPECT_TRUE(std::isfinite(s4));
    EXPECT_GT(s4, 0.0);
}

TEST(Rescale, Examples)
{
    EXPECT_NEAR(prior_scale(1e-4, 6), 0.1, 1e-15);
    EXPECT_EQ(prior_scale(1.0, 6), 1.0);

    const CutoffField z = make_cutoff(0.5, 0.75, 33);
    const GridField c(Grid(33), 2.5);
    const PriorDraw d = rescale(c, 1e-4, 6, z, 9);
    for (std::size_t i = 0; i < c.values().size(); ++i)
        EXPECT_DOUBLE_EQ(d.theta.values()[i], 0.1 * 2.5 * z.values.values()[i]);
    EXPECT_EQ(d.eps_used, 1e-4);
    EXPECT_EQ(d.seed, 9u);

    const GridField base = sample_base(MaternSpec{}, 1, 33);
    const PriorDraw one = rescale(base, 1.0, 6, z);
    for (std::size_t i = 0; i < base.values().size(); ++i)
        EXPECT_EQ(one.theta.values()[i], z.values.values()[i] * base.values()[i]);

    EXPECT_THROW(rescale(base, 0.0, 6, z), std::invalid_argument);
    EXPECT_THROW(rescale(base, 1.5, 6, z), std::invalid_argument);
    EXPECT_THROW(rescale(base, 0.5, 6, make_cutoff(0.5, 0.75, 17)), std::invalid_argument);
}

TEST(Rescale, SupportInsideCutoff)
{
    const CutoffField z = make_cutoff(0.5, 0.75, 33);
    const PriorDraw d = rescale(sample_base(MaternSpec{}, 2, 33), 0.1, 6, z);
    const Grid& g = d.theta.grid();
    for (int iy = 0; iy < g.n(); ++iy)
        for (int ix = 0; ix < g.n(); ++ix)
            if (std::hypot(g.coord(ix), g.coord(iy)) >= 0.75) EXPECT_EQ(d.theta.at(ix, iy), 0.0);
}

TEST(Rescale, Linear)
{
    const CutoffField z = make_cutoff(0.5, 0.75, 33);
    const GridField base = sample_base(MaternSpec{}, 5, 33);
    const double c = 3.0;
    const PriorDraw lhs = rescale(c * base, 0.01, 6, z);
    const PriorDraw rhs = rescale(base, 0.01, 6, z);
    for (std::size_t i = 0; i < base.values().size(); ++i)
        EXPECT_NEAR(lhs.theta.values()[i], c * rhs.theta.values()[i], 1e-15 * std::abs(lhs.theta.values()[i]) + 1e-300);
}

TEST(Rescale, ShrinksWithEps)
{
    const CutoffField z = make_cutoff(0.5, 0.75, 33);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const GridField base = sample_base(MaternSpec{}, seed, 33);
        double prev = INFINITY;
        for (double eps : {1.0, 0.1, 0.01, 0.001}) {
            const double s = rescale(base, eps, 6, z).theta.sup_norm();
            EXPECT_LE(s, prev);
            prev = s;
        }
    }
}

TEST(Rescale, DrawsAreAdmissibleConductivities)
{
    const LinkFunction link(0.5);
    const CutoffField z = make_cutoff(0.5, 0.75, 33);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const PriorDraw d = rescale(sample_base(MaternSpec{}, seed, 33), 0.5, 6, z, seed);
        EXPECT_TRUE(check_membership(link_apply(d.theta, link, 0.75), 0.5, 0.75)) << seed;
    }
}

TEST(RescaledPriorTest, MatchesFreeFunctions)
{
    const MaternSpec spec{};
    const CutoffField z = make_cutoff(0.5, 0.75, 33);
    const RescaledPrior prior(spec, 33, 0.01, z);
    Rng rng(8);
    const Eigen::MatrixXd w = prior.sampler().draw_white(rng);
    const GridField expected = rescale(prior.sampler().field(w), 0.01, 6, z).theta;
    EXPECT_LT(sup_distance(prior.theta(w), expected), 1e-15);
    EXPECT_NEAR(prior.center_theta(w), prior.theta(w).at(16, 16), 1e-14);
    EXPECT_EQ(prior.scale(), prior_scale(0.01, 6));
    EXPECT_THROW(RescaledPrior(spec, 33, 0.0, z), std::invalid_argument);
}

TEST(SobolevSeminorm, Examples)
{
    const Grid g(129);
    EXPECT_NEAR(empirical_sobolev_seminorm(GridField(g, 4.0), 1), 0.0, 1e-12);
    for (int order = 1; order <= 4; ++order)
        EXPECT_NEAR(empirical_sobolev_seminorm(GridField(g, 4.0), order), 0.0, 1e-6);
    const GridField x = GridField::from_function(g, [](double x, double) { return x; });
    EXPECT_NEAR(empirical_sobolev_seminorm(x, 1), std::sqrt(std::numbers::pi), 0.02);
    EXPECT_NEAR(empirical_sobolev_seminorm(x, 2), 0.0, 1e-9);
    EXPECT_THROW(empirical_sobolev_seminorm(x, 0), std::invalid_argument);
    EXPECT_THROW(empirical_sobolev_seminorm(x, 5), std::invalid_argument);
}

TEST(SobolevSeminorm, StableUnderRefinement)
{
    const auto f = [](double x, double y) { return std::sin(2 * x) * std::cos(y) + 0.3 * x * x * y; };
    for (int order = 1; order <= 4; ++order) {
        const double coarse = empirical_sobolev_seminorm(GridField::from_function(Grid(129), f), order);
        const double fine = empirical_sobolev_seminorm(GridField::from_function(Grid(257), f), order);
        EXPECT_LT(std::abs(coarse - fine) / fine, 0.05) << order;
    }
}
