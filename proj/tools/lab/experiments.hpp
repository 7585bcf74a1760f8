#pragma once

#include "config.hpp"

#include "calderon/forward.hpp"
#include "calderon/measurement.hpp"
#include "calderon/pcn.hpp"

#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace lab {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ExperimentReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> files;

    bool ok() const;
};

/// Runs fn(0..n-1) on up to `workers` threads; results must be written to
/// per-index slots so the reduction order stays fixed.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

/// Least-squares slope of log y against log x; throws std::invalid_argument
/// for fewer than two points or nonpositive values.
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

// Truth conductivity and the two meshes used by recovery runs.
struct Problem {
    calderon::ConductivityFunction truth_fn;
    calderon::ConductivityField truth;
    std::shared_ptr<const calderon::ForwardSolver> solver;
    /// Noise-free DtN window of the truth computed on the data mesh.
    calderon::OperatorMatrix lambda_true;
};

Problem make_problem(const ExperimentConfig& c);

struct RecoverRun {
    double eps = 0.0;
    std::uint64_t seed = 0;
    double sup_error = 0.0;
    double acceptance = 0.0;
    double prior_mean_baseline = 0.0;
    double prior_draw_baseline = 0.0;
    long solves = 0;
    calderon::PosteriorSummary summary;
};

RecoverRun recover_run(const ExperimentConfig& c, const Problem& problem, double eps, std::uint64_t seed,
                       bool keep_trace = true);

struct StabilityRow {
    double t;
    double sup_distance;
    double hs_distance;
    double star_distance;
};

struct StabilityFit {
    double forward_exponent;   // log hs vs log sup
    double hs_vs_star;         // log hs vs log star
    double star_vs_hs;         // log star vs log hs
};

std::vector<StabilityRow> stability_sweep(const ExperimentConfig& c);
StabilityFit fit_stability(const std::vector<StabilityRow>& rows);

struct LecamRow {
    int P;
    double exact_deviation;
    double mc_deviation;
};

/// Covariance deviation of electrode -> spectral noise on a J x K window.
std::vector<LecamRow> electrode_to_spectral_study(const std::vector<int>& P, int J, int K, long replicates,
                                                  std::uint64_t seed, int workers);

struct IdentityCovarianceCheck {
    long replicates;
    int dimension;
    double z_statistic;   // aggregate chi-square z-score of all covariance entries
    double max_entry_z;   // largest single-entry z-score
    double max_abs_deviation;
};

/// Empirical covariance of spectral -> electrode output noise against the identity.
IdentityCovarianceCheck spectral_to_electrode_study(int P, int master_truncation, long replicates,
                                                    std::uint64_t seed);

struct KlMonteCarlo {
    double closed_form;
    double mean;
    double mean_se;
    double variance;
    double variance_se;
};

/// Log-likelihood ratio log p1(Y)/p0(Y) under Y ~ p1, compared to the closed-form KL.
KlMonteCarlo kl_monte_carlo(const calderon::OperatorMatrix& L1, const calderon::OperatorMatrix& L0, double eps,
                            long replicates, std::uint64_t seed);

struct TruncationRow {
    std::uint64_t seed;
    int J;
    double risk;
};

/// Risk ||Lambda_hat_J - Lambda||^2 at J_eps/2, J_eps and 2 J_eps per seed.
std::vector<TruncationRow> truncation_sweep(const calderon::OperatorMatrix& truth, double eps, int j_eps,
                                            const std::vector<std::uint64_t>& seeds);

ExperimentReport cmd_recover(const ExperimentConfig& c, const std::filesystem::path& out, int workers);
ExperimentReport cmd_stability(const ExperimentConfig& c, const std::filesystem::path& out, int workers);
ExperimentReport cmd_lecam(const ExperimentConfig& c, const std::filesystem::path& out, int workers);
ExperimentReport cmd_klcheck(const ExperimentConfig& c, const std::filesystem::path& out, int workers);
ExperimentReport cmd_truncation(const ExperimentConfig& c, const std::filesystem::path& out, int workers);

ExperimentReport run_experiment(const ExperimentConfig& c, const std::filesystem::path& out, int workers);

} // namespace lab
