#include "pairwell/runner.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <map>

#include "pairwell/csv.hpp"
#include "pairwell/effective.hpp"
#include "pairwell/errors.hpp"
#include "pairwell/fock_basis.hpp"
#include "pairwell/manifest.hpp"
#include "pairwell/quasienergy.hpp"

namespace pairwell {

namespace {

void report_error(const std::string& type, const std::string& what) {
    nlohmann::json record{{"error", type}, {"detail", what}};
    std::cerr << record.dump() << "\n";
}

struct ProductSet {
    std::optional<Trajectory> exact;
    std::optional<Trajectory> effective;
    std::optional<QuasienergySpectrum> spectrum;
    std::optional<StabilityMap> map;
    std::optional<std::vector<CurvePoint>> curve;
    std::optional<SolveResult> solve;
    SystemParams resolved_params;  ///< after an applied solve
};

std::optional<std::vector<int>> propagation_subspace(const ScenarioConfig& config,
                                                     const SystemParams& params) {
    if (config.channel == Channel::IntrawellSpinFlipping || !config.reduce_to_subspace)
        return std::nullopt;
    return channel_subspace(config.channel, params, config.initial_state.front().first);
}

std::vector<double> sample_times(const SystemParams& params, const IntegratorConfig& cfg,
                                 const std::vector<int>& subspace) {
    const int steps =
        resolve_steps_per_period(params, subspace, cfg.t_end, cfg.steps_per_period);
    const double h = params.period() / steps;
    const long base_steps = static_cast<long>(std::ceil(cfg.t_end * steps / params.period()));
    const int stride = resolve_sample_stride(base_steps, cfg.sample_stride);
    const long total =
        static_cast<long>(std::ceil(cfg.t_end / (h * static_cast<double>(stride)) - 1e-12)) *
        stride;
    std::vector<double> times;
    times.reserve(static_cast<std::size_t>(total / stride) + 1);
    for (long k = 0; k <= total; k += stride) times.push_back(static_cast<double>(k) * h);
    return times;
}

ProductSet compute_products(const ScenarioConfig& config, int workers) {
    ProductSet products;
    SystemParams params = config.params;

    if (config.outputs.solve) {
        const SolveSpec& spec = *config.solve;
        SolveResult result;
        if (spec.kind == "balance") {
            result = solve_balance_f(config.channel, params, spec.lo, spec.hi, spec.hint);
            if (spec.apply) params.f = result.value;
        } else {
            // For the intrawell scenario the suppressed coupling is the
            // interwell one of the same (integer-alpha) parameters.
            const Channel cross_channel = config.channel == Channel::IntrawellSpinFlipping
                                              ? Channel::InterwellSpinConserving
                                              : config.channel;
            result = solve_rho_zero(cross_channel, params, spec.parameter, spec.lo, spec.hi,
                                    spec.hint);
            if (spec.apply) {
                AxisSpec axis;
                axis.param = spec.parameter;
                apply_axis(axis, result.value, params);
            }
        }
        products.solve = result;
    }
    products.resolved_params = params;

    if (config.outputs.spectrum) {
        if (config.channel == Channel::IntrawellSpinFlipping && !interwell_suppressed(params))
            throw PreconditionError(
                "intrawell spectrum requested but the interwell cross coupling is not "
                "suppressed (|rho_2| >= 1e-6) at these parameters");
        products.spectrum = quasienergies(config.channel, params);
    }

    if (config.outputs.trajectory) {
        const auto subspace = propagation_subspace(config, params);
        products.exact = integrate(params, config.initial_vector(), config.integrator, subspace,
                                   config.allow_unnormalized);
    }

    if (config.outputs.effective_trajectory) {
        std::vector<double> times;
        if (products.exact) {
            times = products.exact->times;
        } else {
            const auto subspace = propagation_subspace(config, params);
            std::vector<int> all(fock::kDim);
            for (int k = 0; k < fock::kDim; ++k) all[static_cast<std::size_t>(k)] = k + 1;
            times = sample_times(params, config.integrator, subspace ? *subspace : all);
        }
        products.effective =
            effective_trajectory(config.channel, params, config.initial_vector(), times);
    }

    if (config.outputs.curve)
        products.curve = unpaired_average_curve(config.channel, params, config.curve->sweep,
                                                config.curve->k_unpaired, config.integrator,
                                                workers);

    if (config.outputs.map) {
        GridSpec grid = *config.map;
        grid.fixed = params;
        products.map = scan(grid, workers);
    }
    return products;
}

struct CheckResult {
    bool ok = true;
    std::string detail;
};

double window_start(const Expectation& e, double t_end) {
    return e.t_a != 0.0 ? e.t_a : 0.75 * t_end;
}
double window_end(const Expectation& e, double t_end) { return e.t_b != 0.0 ? e.t_b : t_end; }

CheckResult evaluate(const Expectation& e, const ScenarioConfig& config,
                     const ProductSet& products) {
    const double t_end = config.integrator.t_end;
    if (e.type == "pbar_below" || e.type == "pbar_above") {
        if (!products.exact) return {false, "no exact trajectory"};
        const double pbar = time_avg_probability(
            *products.exact, e.state, e.t_a, e.t_b != 0.0 ? e.t_b : t_end);
        const bool ok = e.type == "pbar_below" ? pbar < e.value : pbar > e.value;
        return {ok, "Pbar(" + std::to_string(e.state) + ") = " + csv::format(pbar)};
    }
    if (e.type == "verdict") {
        if (!products.spectrum) return {false, "no spectrum"};
        return {to_string(products.spectrum->verdict) == e.text,
                "verdict " + to_string(products.spectrum->verdict)};
    }
    if (e.type == "verdict_at") {
        if (!config.map) return {false, "no map block"};
        SystemParams cell = products.resolved_params;
        apply_axis(config.map->x, e.x, cell);
        apply_axis(config.map->y, e.y, cell);
        const QuasienergySpectrum spectrum = quasienergies(config.map->channel, cell);
        return {to_string(spectrum.verdict) == e.text,
                "verdict at (" + csv::format(e.x) + ", " + csv::format(e.y) + ") = " +
                    to_string(spectrum.verdict)};
    }
    if (e.type == "spectrum_real_count") {
        if (!products.spectrum) return {false, "no spectrum"};
        const double tol = stability_tolerance(products.resolved_params);
        int reals = 0;
        for (const auto& energy : products.spectrum->energies)
            if (std::abs(energy.imag()) < tol) ++reals;
        return {reals == static_cast<int>(e.value), std::to_string(reals) + " real energies"};
    }
    if (e.type == "plateau_total" || e.type == "plateau_sum") {
        if (!products.exact) return {false, "no exact trajectory"};
        const Trajectory& traj = *products.exact;
        const double ta = window_start(e, t_end);
        const double tb = window_end(e, t_end);
        double mean = 0.0, lo = 1e300, hi = -1e300;
        std::size_t count = 0;
        for (std::size_t j = 0; j < traj.size(); ++j) {
            if (traj.times[j] < ta || traj.times[j] > tb) continue;
            double value = 0.0;
            if (e.type == "plateau_total") {
                value = traj.total(j);
            } else {
                for (int k : e.states) value += traj.probability_of_state(j, k);
            }
            mean += value;
            lo = std::min(lo, value);
            hi = std::max(hi, value);
            ++count;
        }
        if (count == 0) return {false, "empty plateau window"};
        mean /= static_cast<double>(count);
        bool ok = (hi - lo) <= 0.02 * std::abs(mean);
        if (e.value != 0.0) ok = ok && std::abs(mean - e.value) <= e.tol;
        return {ok, "plateau mean " + csv::format(mean) + ", spread " + csv::format(hi - lo)};
    }
    if (e.type == "decay_rate") {
        if (!products.exact) return {false, "no exact trajectory"};
        const Trajectory& traj = *products.exact;
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        std::size_t n = 0;
        for (std::size_t j = 0; j < traj.size(); ++j) {
            const double t = traj.times[j];
            if (t < e.t_a || t > e.t_b) continue;
            const double p = traj.probability_of_state(j, e.state);
            if (p <= 0.0) continue;
            const double logp = std::log(p);
            sx += t;
            sy += logp;
            sxx += t * t;
            sxy += t * logp;
            ++n;
        }
        if (n < 2) return {false, "too few decay samples"};
        const double denom = static_cast<double>(n) * sxx - sx * sx;
        const double rate = -(static_cast<double>(n) * sxy - sx * sy) / denom;
        return {std::abs(rate - e.value) <= e.tol,
                "fitted decay rate " + csv::format(rate)};
    }
    if (e.type == "solve_near") {
        if (!products.solve) return {false, "no solve result"};
        return {std::abs(products.solve->value - e.value) <= e.tol,
                "solved value " + csv::format(products.solve->value)};
    }
    if (e.type == "curve_peak_above" || e.type == "curve_min_below") {
        if (!products.curve) return {false, "no curve"};
        double peak = -1e300, dip = 1e300;
        for (const auto& point : *products.curve) {
            peak = std::max(peak, point.pbar);
            dip = std::min(dip, point.pbar);
        }
        if (e.type == "curve_peak_above")
            return {peak > e.value, "curve peak " + csv::format(peak)};
        return {dip < e.value, "curve min " + csv::format(dip)};
    }
    if (e.type == "mirror_rho_b") {
        if (!config.map) return {false, "no map block"};
        const GridSpec& grid = *config.map;
        const double axis = 2.0 * grid.fixed.omega_z / grid.fixed.omega;
        const double x_mid = 0.5 * (grid.x.lo + grid.x.hi);
        for (double frac : {0.25, 0.5, 0.75}) {
            const double y = grid.y.lo + frac * (grid.y.hi - grid.y.lo);
            SystemParams a = products.resolved_params;
            apply_axis(grid.x, x_mid, a);
            SystemParams b = a;
            apply_axis(grid.y, y, a);
            apply_axis(grid.y, 2.0 * axis - y, b);
            const double ra = couplings(grid.channel, a).rho_b;
            const double rb = couplings(grid.channel, b).rho_b;
            if (std::abs(ra - rb) > 1e-12 * (1.0 + std::abs(ra)))
                return {false, "mirror broken at 2f/omega = " + csv::format(y)};
        }
        return {true, "cross coupling mirror-symmetric about 2f/omega = " + csv::format(axis)};
    }
    return {false, "unknown expectation type '" + e.type + "'"};
}

}  // namespace

int run_scenario(const ScenarioConfig& config, const RunOptions& options) {
    try {
        config.validate();
        std::filesystem::create_directories(options.out_dir);
        const ProductSet products = compute_products(config, options.workers);

        std::map<std::string, ManifestEntry> entries;
        auto emit = [&](const std::string& name, const std::string& contents) {
            csv::write_file(options.out_dir + "/" + name, contents);
            entries[name] = {contents.size(), fnv1a64_hex(contents)};
        };
        if (products.solve)
            emit("solve.csv",
                 csv::solve(config.solve->kind, config.solve->parameter, *products.solve));
        if (products.spectrum) emit("spectrum.csv", csv::spectrum(*products.spectrum));
        if (products.exact) emit("trajectory.csv", csv::trajectory(*products.exact));
        if (products.effective) emit("effective.csv", csv::trajectory(*products.effective));
        if (products.curve) emit("curve.csv", csv::curve(*products.curve));
        if (products.map) emit("map.csv", csv::stability_map(*products.map));

        bool all_ok = true;
        for (const auto& expectation : config.expectations) {
            const CheckResult result = evaluate(expectation, config, products);
            all_ok = all_ok && result.ok;
            if (!options.quiet)
                std::cout << (result.ok ? "[ok]   " : "[FAIL] ") << config.name << " "
                          << expectation.type << ": " << result.detail << "\n";
        }
        write_manifest(options.out_dir, to_json(config), entries, options.seed);
        return all_ok ? kExitOk : kExitChecksFailed;
    } catch (const ConfigError& err) {
        report_error("config", err.what());
        return kExitConfigError;
    } catch (const ResonanceError& err) {
        report_error("resonance", err.what());
        return kExitPreconditionError;
    } catch (const PreconditionError& err) {
        report_error("precondition", err.what());
        return kExitPreconditionError;
    } catch (const NoSignChange& err) {
        report_error("solver", err.what());
        return kExitSolverError;
    } catch (const std::invalid_argument& err) {
        report_error("precondition", err.what());
        return kExitPreconditionError;
    }
}

int compare_scenario(const ScenarioConfig& config, const RunOptions& options) {
    try {
        config.validate();
        std::filesystem::create_directories(options.out_dir);
        SystemParams params = config.params;

        const auto subspace = propagation_subspace(config, params);
        const Trajectory exact = integrate(params, config.initial_vector(), config.integrator,
                                           subspace, config.allow_unnormalized);
        const Trajectory effective =
            effective_trajectory(config.channel, params, config.initial_vector(), exact.times);

        nlohmann::json report;
        report["name"] = config.name;
        report["channel"] = to_string(config.channel);

        // Per-state deviation over the reduced model's states.
        nlohmann::json deviations;
        double paired_deviation = 0.0;
        const std::vector<int> model_states = effective_amplitude_indices(config.channel);
        for (int k : model_states) {
            double dev = 0.0;
            for (std::size_t j = 0; j < exact.size(); ++j)
                dev = std::max(dev, std::abs(exact.probability_of_state(j, k) -
                                             effective.probability_of_state(j, k)));
            deviations["P" + std::to_string(k)] = dev;
            const bool unpaired = config.channel != Channel::IntrawellSpinFlipping &&
                                  k == unpaired_state(config.channel);
            if (!unpaired) paired_deviation = std::max(paired_deviation, dev);
        }
        report["max_deviation_per_state"] = deviations;
        report["max_deviation_paired"] = paired_deviation;

        if (config.channel != Channel::IntrawellSpinFlipping) {
            const int k_unpaired = unpaired_state(config.channel);
            const double pbar =
                time_avg_probability(exact, k_unpaired, 0.0, config.integrator.t_end);
            report["unpaired_state"] = k_unpaired;
            report["unpaired_pbar"] = pbar;
            report["near_resonance"] = pbar > kUnpairedThreshold;
        }

        // Monodromy oracle vs the closed-form quasienergies. Valid whenever
        // the propagated subspace is exactly closed (interwell channels;
        // the intrawell six-state block requires nu = 0).
        const bool monodromy_valid =
            config.channel != Channel::IntrawellSpinFlipping || params.nu == 0.0;
        if (monodromy_valid) {
            const std::vector<int> closed =
                config.channel == Channel::IntrawellSpinFlipping
                    ? std::vector<int>{1, 2, 3, 4, 5, 6}
                    : channel_subspace(config.channel, params,
                                       config.initial_state.front().first);
            const MonodromyResult oracle = monodromy(params, closed, config.integrator);
            const QuasienergySpectrum analytic = quasienergies(config.channel, params);
            std::vector<Complex> numeric = oracle.quasienergies;
            nlohmann::json residuals = nlohmann::json::array();
            for (const auto& target : analytic.energies) {
                // greedy nearest match, each numeric value used once
                double best = 1e300;
                std::size_t best_at = 0;
                for (std::size_t j = 0; j < numeric.size(); ++j) {
                    const Complex aligned =
                        align_quasienergy(numeric[j], target, params.omega);
                    const double dist = std::abs(aligned - target);
                    if (dist < best) {
                        best = dist;
                        best_at = j;
                    }
                }
                residuals.push_back(best);
                if (!numeric.empty()) numeric.erase(numeric.begin() + best_at);
            }
            report["quasienergy_residuals"] = residuals;
            report["monodromy_defective_warning"] = oracle.defective_warning;
        }

        const std::string text = report.dump(2) + "\n";
        csv::write_file(options.out_dir + "/report.json", text);
        if (!options.quiet) std::cout << text;
        return kExitOk;
    } catch (const ConfigError& err) {
        report_error("config", err.what());
        return kExitConfigError;
    } catch (const ResonanceError& err) {
        report_error("resonance", err.what());
        return kExitPreconditionError;
    } catch (const std::invalid_argument& err) {
        report_error("precondition", err.what());
        return kExitPreconditionError;
    }
}

}  // namespace pairwell
