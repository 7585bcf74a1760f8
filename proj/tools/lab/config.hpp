#pragma once

#include "calderon/prior.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace lab {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    std::string experiment = "recover";

    // geometry
    double r0 = 0.5;
    double r1 = 0.75;
    double m1 = 0.5;

    // truth: homogeneous | concentric | smooth_concentric | prior
    std::string truth = "smooth_concentric";
    double kappa = 2.0;
    double rho = 0.5;
    double rho_in = 0.3;
    double rho_out = 0.5;
    std::uint64_t truth_seed = 7;

    // noise
    std::string model = "spectral";
    std::vector<double> eps = {0.1, 0.03, 0.01};
    double r = 0.0;
    int J = 8;
    int K = 8;
    std::vector<int> P = {16, 32, 64, 128};
    int P_direct = 8;

    // prior
    calderon::MaternSpec prior{};
    int grid_n = 33;

    // chain
    double beta = 0.05;
    long n_iter = 20000;
    long burn_in = 5000;

    // solver
    double h = 0.08;
    double data_h = 0.02;

    // run
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
    long replicates = 10000;

    // stability
    std::vector<double> t = {0.02, 0.04, 0.06, 0.08, 0.1, 0.12, 0.14, 0.16, 0.18, 0.2};
    double bump_cx = 0.1;
    double bump_cy = 0.0;
    double bump_radius = 0.4;

    // klcheck
    std::vector<double> mu = {0.0, 0.001, 0.005, 0.01, 0.02, 0.05, 0.1};
    double kl_kappa = 2.2;
    double kl_eps = 0.02;

    // truncation
    double truncation_eps = 1e-4;
};

/// Parses "[section]" / "key = value" text. Unknown sections or keys,
/// duplicates and malformed values raise ConfigError.
ExperimentConfig parse_config(std::istream& is);
ExperimentConfig load_config(const std::string& path);

/// Canonical text of every resolved setting; parse_config(canonical(c)) == c.
std::string canonical(const ExperimentConfig& config);

} // namespace lab
