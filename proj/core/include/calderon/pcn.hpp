#pragma once

// Preconditioned Crank-Nicolson sampling of the posterior on theta and the
// posterior-mean estimator.

#include "calderon/likelihood.hpp"
#include "calderon/prior.hpp"
#include "calderon/rng.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

namespace calderon {

struct ChainState {
    Eigen::MatrixXd white; // prior coordinates, N(0, I) under the prior
    GridField theta;
    OperatorMatrix lambda; // DtN window of Phi(theta)
    double loglik = 0.0;
    long step = 0;
};

ChainState make_state(const Eigen::MatrixXd& white, const LikelihoodContext& ctx, const RescaledPrior& prior);

/// Metropolis acceptance for a log-likelihood increment; NaN and -inf reject.
bool accept_move(double delta_loglik, double uniform) noexcept;

/// One pCN move: proposal sqrt(1 - beta^2) Z + beta xi with xi a fresh prior
/// draw, accepted with probability min(1, exp(l(proposal) - l(current))).
ChainState pcn_step(const ChainState& state, double beta, const LikelihoodContext& ctx,
                    const RescaledPrior& prior, Rng& rng, bool* accepted = nullptr);

struct TraceRow {
    long step;
    double loglik;
    bool accepted;
    double sup_theta;
};

struct ChainOptions {
    /// Start from a prior draw instead of theta = 0.
    bool start_from_prior = false;
    bool keep_trace = true;
    /// Recompute the likelihood every this many steps and compare to the cache.
    int coherence_every = 100;
    int batches = 20;
    /// Random stream id; data synthesis uses stream 0.
    std::uint64_t stream = 1;
};

struct PosteriorSummary {
    GridField mean_theta;
    ConductivityField mean_gamma;
    double acceptance_rate = 0.0;
    long chain_length = 0;
    long burn_in = 0;
    std::optional<double> sup_error;
    /// Batch-means standard error of mean_theta, pointwise on the grid.
    GridField mc_standard_error;
    /// Largest relative cache mismatch seen at coherence checks.
    double coherence_error = 0.0;
    long likelihood_evaluations = 0;
    /// theta at the grid center for every post-burn-in state.
    std::vector<double> center_trace;
    std::vector<TraceRow> trace;
};

PosteriorSummary run_chain(const LikelihoodContext& ctx, const RescaledPrior& prior, double beta, long n_iter,
                           long burn_in, std::uint64_t seed, const ChainOptions& options = {},
                           const ConductivityField* truth = nullptr);

} // namespace calderon
