#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace rkhs {

/// Exit codes of the batch front-end. Part of the CLI contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;    // schema/IO/domain errors
inline constexpr int kExitVerdict = 2;  // a numerical verdict failed

struct JobOutcome {
    int exit_code = kExitOk;
    std::string summary;        // one line for stderr
    std::string artifact_path;  // the single result artifact written
};

/// Validated job description.
///
/// Config schema:
///   {
///     "kernel":     { "kind": ..., "params": {...} },   // kernel commands
///     "command":    "...",            // optional, must match the CLI verb
///     "payload":    { ... },          // command-specific
///     "output":     { "path": "...", "format": "csv"|"json" },
///     "tolerances": { name: value },  // optional overrides
///     "seed":       0                 // optional u64, default 0
///   }
struct JobConfig {
    std::string command;
    nlohmann::json kernel;   // empty when absent
    nlohmann::json payload;  // empty object when absent
    std::string output_path;
    std::string output_format;  // "csv" or "json"
    nlohmann::json tolerances;
    std::uint64_t seed = 0;

    /// Parses and schema-checks a config file. command_from_cli is the CLI
    /// verb; output/seed overrides come from the command line.
    static JobConfig load(const std::string& config_path, const std::string& command_from_cli,
                          const std::string& output_override, const std::uint64_t* seed_override);

    double tolerance(const std::string& name, double fallback) const;
};

/// Runs one job and writes exactly one artifact. Exceptions escape only for
/// usage-level errors; callers map them to kExitUsage.
JobOutcome run_job(const JobConfig& config);

}  // namespace rkhs
