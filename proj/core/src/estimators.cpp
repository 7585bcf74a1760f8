#include "calderon/estimators.hpp"

#include <cmath>
#include <stdexcept>

namespace calderon {

OperatorMatrix truncation_estimator(const SpectralData& data, int J)
{
    if (J < 0 || J > data.J() || J > data.K())
        throw std::invalid_argument("truncation_estimator: J exceeds the data window");
    return project(OperatorMatrix(data.Y, data.r), J, J);
}

double chi2_threshold(double eps, int J, double x)
{
    return eps * std::sqrt(static_cast<double>(J) * J + 2.0 * J * std::sqrt(x) + 2.0 * x);
}

int test_statistic(const SpectralData& data, const OperatorMatrix& gamma0_matrix, int J, double threshold)
{
    if (gamma0_matrix.J() != data.J() || gamma0_matrix.K() != data.K())
        throw std::invalid_argument("test_statistic: shape mismatch");
    const OperatorMatrix diff = truncation_estimator(data, J) - project(gamma0_matrix, J, J);
    return hs_norm(diff) > threshold ? 1 : 0;
}

int truncation_level(double eps, int alpha)
{
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("truncation_level: eps must lie in (0, 1)");
    const double eta = std::pow(eps, alpha / (alpha + 2.0));
    // guard against floor landing just below an exact integer
    return static_cast<int>(std::floor(eta / eps * (1.0 + 1e-12)));
}

double contraction_rate(double eps, double delta)
{
    return std::pow(std::log(1.0 / eps), -delta);
}

} // namespace calderon
