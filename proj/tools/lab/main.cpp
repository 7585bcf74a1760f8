#include "config.hpp"
#include "experiments.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"Statistical Calderon problem laboratory"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string config_path;
    std::string out_dir = "results";
    int workers = 0;
    std::uint64_t seed_offset = 0;
    app.add_option("--config", config_path, "Experiment config file")->check(CLI::ExistingFile);
    app.add_option("--out", out_dir, "Output directory");
    app.add_option("--workers", workers, "Concurrent runs (default: $CALDERON_LAB_WORKERS or 1)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed-offset", seed_offset, "Added to every run seed");

    for (const char* name : {"recover", "stability", "lecam", "klcheck", "truncation"})
        app.add_subcommand(name, std::string("Run the ") + name + " experiment");
    CLI11_PARSE(app, argc, argv);

    if (workers == 0) {
        workers = 1;
        if (const char* env = std::getenv("CALDERON_LAB_WORKERS")) {
            try {
                workers = std::max(1, std::stoi(env));
            } catch (const std::exception&) {
                std::cerr << "ignoring invalid CALDERON_LAB_WORKERS='" << env << "'\n";
            }
        }
    }

    lab::ExperimentConfig config;
    try {
        if (!config_path.empty()) config = lab::load_config(config_path);
        config.experiment = app.get_subcommands().front()->get_name();
        for (auto& s : config.seeds) s += seed_offset;
    } catch (const lab::ConfigError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        const lab::ExperimentReport report = lab::run_experiment(config, out_dir, workers);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        for (const auto& f : report.files) std::cout << out_dir << '/' << f << '\n';
        for (const auto& c : report.checks) {
            std::cout << (c.pass ? "pass " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
            if (!c.pass) std::cerr << "check failed: " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
        }
        std::cerr << "wall time " << seconds << " s\n";
        return report.ok() ? 0 : 1;
    } catch (const lab::ConfigError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
