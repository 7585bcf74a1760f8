#include "calderon/pcn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace calderon {

ChainState make_state(const Eigen::MatrixXd& white, const LikelihoodContext& ctx, const RescaledPrior& prior)
{
    ChainState s;
    s.white = white;
    s.theta = prior.theta(white);
    LikelihoodValue lv = evaluate_likelihood(s.theta, ctx);
    s.lambda = std::move(lv.lambda);
    s.loglik = lv.value;
    return s;
}

bool accept_move(double delta_loglik, double uniform) noexcept
{
    if (std::isnan(delta_loglik)) return false;
    if (delta_loglik >= 0.0) return true;
    return uniform < std::exp(delta_loglik);
}

ChainState pcn_step(const ChainState& state, double beta, const LikelihoodContext& ctx,
                    const RescaledPrior& prior, Rng& rng, bool* accepted)
{
    if (!(beta > 0.0 && beta <= 1.0)) throw std::invalid_argument("pcn_step: beta must lie in (0, 1]");
    const Eigen::MatrixXd xi = prior.sampler().draw_white(rng);
    const Eigen::MatrixXd proposal = std::sqrt(1.0 - beta * beta) * state.white + beta * xi;
    const double u = rng.uniform();

    ChainState next;
    bool ok = false;
    if (ctx.enabled) {
        ChainState candidate = make_state(proposal, ctx, prior);
        ok = accept_move(candidate.loglik - state.loglik, u);
        if (ok) next = std::move(candidate);
    } else {
        ok = true;
        next.white = proposal;
        next.theta = prior.theta(proposal);
        next.lambda = OperatorMatrix(ctx.J(), ctx.K(), ctx.r());
    }
    if (!ok) next = state;
    next.step = state.step + 1;
    if (accepted) *accepted = ok;
    return next;
}

PosteriorSummary run_chain(const LikelihoodContext& ctx, const RescaledPrior& prior, double beta, long n_iter,
                           long burn_in, std::uint64_t seed, const ChainOptions& options,
                           const ConductivityField* truth)
{
    if (!(n_iter > burn_in && burn_in >= 0)) throw std::invalid_argument("run_chain: need n_iter > burn_in >= 0");
    Rng rng(seed, options.stream);
    const Eigen::Index dim = prior.sampler().coeff_dim();
    const Eigen::MatrixXd start =
        options.start_from_prior ? prior.sampler().draw_white(rng) : Eigen::MatrixXd::Zero(dim, dim);

    PosteriorSummary out;
    out.chain_length = n_iter;
    out.burn_in = burn_in;
    ChainState state = make_state(start, ctx, prior);
    out.likelihood_evaluations = ctx.enabled ? 1 : 0;

    const long kept = n_iter - burn_in;
    const int batches = static_cast<int>(std::clamp<long>(options.batches, 1, kept));
    const long batch_len = kept / batches;
    Eigen::MatrixXd white_sum = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::MatrixXd batch_sum = Eigen::MatrixXd::Zero(dim, dim);
    std::vector<Eigen::MatrixXd> batch_means;
    long accepted_count = 0;

    for (long it = 0; it < n_iter; ++it) {
        bool accepted = false;
        state = pcn_step(state, beta, ctx, prior, rng, &accepted);
        if (ctx.enabled) ++out.likelihood_evaluations;
        accepted_count += accepted;

        if (ctx.enabled && options.coherence_every > 0 && state.step % options.coherence_every == 0) {
            const double fresh = log_likelihood(state.theta, ctx);
            const double rel = std::abs(fresh - state.loglik) / std::max(1.0, std::abs(fresh));
            out.coherence_error = std::max(out.coherence_error, rel);
        }
        if (options.keep_trace)
            out.trace.push_back({state.step, state.loglik, accepted, state.theta.sup_norm()});

        if (it >= burn_in) {
            white_sum += state.white;
            out.center_trace.push_back(prior.center_theta(state.white));
            const long pos = it - burn_in;
            if (pos < batch_len * batches) {
                batch_sum += state.white;
                if ((pos + 1) % batch_len == 0) {
                    batch_means.push_back(batch_sum / static_cast<double>(batch_len));
                    batch_sum.setZero();
                }
            }
        }
    }

    // theta is linear in the white coordinates, so means commute with the map
    const Eigen::MatrixXd mean_white = white_sum / static_cast<double>(kept);
    out.mean_theta = prior.theta(mean_white);
    out.mean_gamma = link_apply(out.mean_theta, ctx.link);
    out.acceptance_rate = static_cast<double>(accepted_count) / static_cast<double>(n_iter);

    GridField var(out.mean_theta.grid());
    if (batch_means.size() > 1) {
        Eigen::MatrixXd grand = Eigen::MatrixXd::Zero(dim, dim);
        for (const auto& b : batch_means) grand += b;
        grand /= static_cast<double>(batch_means.size());
        const GridField grand_theta = prior.theta(grand);
        for (const auto& b : batch_means) {
            const GridField d = prior.theta(b) - grand_theta;
            for (std::size_t i = 0; i < var.values().size(); ++i) var.values()[i] += d.values()[i] * d.values()[i];
        }
        const double nb = static_cast<double>(batch_means.size());
        for (double& v : var.values()) v = std::sqrt(v / (nb - 1.0) / nb);
    }
    out.mc_standard_error = var;

    if (truth) out.sup_error = sup_distance(out.mean_gamma, *truth);
    return out;
}

} // namespace calderon
