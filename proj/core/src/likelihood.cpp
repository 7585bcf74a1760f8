#include "calderon/likelihood.hpp"

#include <stdexcept>

namespace calderon {

double log_likelihood_of(const OperatorMatrix& lambda, const SpectralData& data)
{
    if (lambda.J() != data.J() || lambda.K() != data.K())
        throw std::invalid_argument("log_likelihood: window mismatch");
    if (lambda.r() != data.r) throw std::invalid_argument("log_likelihood: r mismatch");
    const auto& t = lambda.entries();
    const double inv = 1.0 / (data.eps * data.eps);
    return inv * (data.Y.cwiseProduct(t).sum() - 0.5 * t.squaredNorm());
}

LikelihoodValue evaluate_likelihood(const GridField& theta, const LikelihoodContext& ctx)
{
    if (!ctx.enabled) return {OperatorMatrix(ctx.J(), ctx.K(), ctx.r()), 0.0};
    if (!ctx.solver) throw std::invalid_argument("evaluate_likelihood: no forward solver");
    const ConductivityField gamma = link_apply(theta, ctx.link);
    LikelihoodValue out;
    out.lambda = ctx.solver->assemble(ctx.solver->sample(gamma), ctx.J(), ctx.K(), ctx.r());
    out.value = log_likelihood_of(out.lambda, ctx.data);
    return out;
}

double log_likelihood(const GridField& theta, const LikelihoodContext& ctx)
{
    return evaluate_likelihood(theta, ctx).value;
}

} // namespace calderon
