#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pairwell/atlas.hpp"
#include "pairwell/channel.hpp"
#include "pairwell/integrator.hpp"
#include "pairwell/system_params.hpp"

namespace pairwell {

/// Declarative post-run check a scenario carries (presets use these to
/// encode the qualitative claims they reproduce). `run` evaluates every
/// check and fails nonzero when one is violated.
struct Expectation {
    std::string type;       // pbar_below | pbar_above | verdict | spectrum_real_count |
                            // plateau_total | plateau_sum | decay_rate | solve_near |
                            // curve_peak_above | curve_min_below | mirror_rho_b
    int state = 0;          // 1-based Fock index (pbar_*, decay_rate)
    std::vector<int> states;  // plateau_sum members
    double value = 0.0;     // threshold / expected value
    double tol = 0.0;       // tolerance where applicable
    double t_a = 0.0;       // evaluation window start
    double t_b = 0.0;       // evaluation window end (0 = t_end)
    double x = 0.0;         // map coordinates for type == "verdict_at"
    double y = 0.0;
    std::string text;       // verdict name for verdict / verdict_at
};

struct SolveSpec {
    std::string kind = "balance";  // balance | rho_zero
    std::string parameter = "f";   // solved parameter (axis name)
    double lo = 0.0;
    double hi = 0.0;
    std::optional<double> hint;
    bool apply = true;  ///< write the solution back into params for later products
};

struct CurveSpec {
    AxisSpec sweep;
    int k_unpaired = 7;
};

/// Requested output products; empty filename keeps the fixed default name.
struct Outputs {
    bool trajectory = false;
    bool effective_trajectory = false;
    bool spectrum = false;
    bool map = false;
    bool curve = false;
    bool solve = false;
};

struct ScenarioConfig {
    std::string name = "scenario";
    SystemParams params;
    Channel channel = Channel::InterwellSpinConserving;
    /// (label, weight) pairs; a single pair with weight 1 is a Fock state.
    std::vector<std::pair<std::string, std::complex<double>>> initial_state;
    IntegratorConfig integrator;
    bool allow_unnormalized = false;
    /// Interwell scenarios propagate the closed channel subspace (the
    /// reduced coupled equations) when set; the intrawell channel always
    /// uses the full space since its subspace is only approximately closed.
    bool reduce_to_subspace = true;
    Outputs outputs;
    std::optional<GridSpec> map;
    std::optional<CurveSpec> curve;
    std::optional<SolveSpec> solve;
    std::vector<Expectation> expectations;
    /// Free-form documentation block (e.g. the physical recoil energy the
    /// frequency unit refers to); carried through to the manifest untouched.
    nlohmann::json metadata;

    /// Full semantic validation (parameter invariants, normalization,
    /// channel preconditions of requested products). Throws ConfigError.
    void validate() const;

    /// Initial state as a 10-component vector.
    Eigen::VectorXcd initial_vector() const;
};

nlohmann::json to_json(const ScenarioConfig& config);
ScenarioConfig config_from_json(const nlohmann::json& j);
ScenarioConfig load_config(const std::string& path);

}  // namespace pairwell
