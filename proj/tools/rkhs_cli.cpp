#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "rkhs/job.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "rkhs — batch toolkit for kernel-induced metrics, Gram factorizations,\n"
        "projection norm traces, measure pairings and the related verification\n"
        "suites. Runs one job per invocation and writes one artifact."};
    app.name("rkhs");

    std::string command, config_path, output_path;
    std::uint64_t seed = 0;
    app.add_option("command", command,
                   "one of: gram interp norm-trace membership metric pair embed distance "
                   "verify-suite fbm-compare gaussian-check isometry-check")
        ->required();
    app.add_option("--config", config_path, "JSON job description")->required();
    app.add_option("--output", output_path, "artifact path (overrides output.path)");
    auto* seed_opt = app.add_option("--seed", seed, "seed for randomized suites (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return rkhs::kExitOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return rkhs::kExitUsage;
    }

    try {
        const std::uint64_t* seed_override = seed_opt->count() > 0 ? &seed : nullptr;
        const rkhs::JobConfig cfg =
            rkhs::JobConfig::load(config_path, command, output_path, seed_override);
        const rkhs::JobOutcome outcome = rkhs::run_job(cfg);
        std::cerr << outcome.summary << "\n";
        return outcome.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return rkhs::kExitUsage;
    }
}
