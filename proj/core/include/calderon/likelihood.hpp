#pragma once

#include "calderon/conductivity.hpp"
#include "calderon/forward.hpp"
#include "calderon/measurement.hpp"

#include <memory>

namespace calderon {

/// Everything needed to evaluate the spectral-model log-likelihood of theta.
struct LikelihoodContext {
    SpectralData data;
    std::shared_ptr<const ForwardSolver> solver;
    LinkFunction link{};
    /// When false the likelihood is identically zero and no solve is done.
    bool enabled = true;

    int J() const noexcept { return data.J(); }
    int K() const noexcept { return data.K(); }
    double r() const noexcept { return data.r; }
};

struct LikelihoodValue {
    OperatorMatrix lambda;
    double value = 0.0;
};

/// eps^{-2} <Y, t> - (1/2) eps^{-2} ||t||^2 for a given DtN window t.
double log_likelihood_of(const OperatorMatrix& lambda, const SpectralData& data);

/// Assembles the DtN window of Phi(theta) and evaluates the log-likelihood.
LikelihoodValue evaluate_likelihood(const GridField& theta, const LikelihoodContext& ctx);
double log_likelihood(const GridField& theta, const LikelihoodContext& ctx);

} // namespace calderon
