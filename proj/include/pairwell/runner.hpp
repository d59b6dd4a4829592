#pragma once

#include <optional>
#include <string>

#include "pairwell/config.hpp"

namespace pairwell {

/// CLI exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitChecksFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitPreconditionError = 3;
inline constexpr int kExitSolverError = 4;

struct RunOptions {
    std::string out_dir = ".";
    int workers = 1;
    std::optional<long> seed;  ///< recorded in the manifest; no randomness exists
    bool quiet = false;
};

/// Executes every requested product of a scenario, writes the fixed-name
/// CSV files plus manifest.json into out_dir, evaluates the scenario's
/// declared expectations, and returns a CLI exit code.
int run_scenario(const ScenarioConfig& config, const RunOptions& options);

/// Exact-vs-effective comparison: per-state maximum probability deviation,
/// the unpaired-state time average with the near-resonance flag, and the
/// monodromy-vs-analytical quasienergy residuals. Writes report.json.
int compare_scenario(const ScenarioConfig& config, const RunOptions& options);

}  // namespace pairwell
