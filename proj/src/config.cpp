#include "pairwell/config.hpp"

#include <cmath>
#include <fstream>

#include "pairwell/errors.hpp"
#include "pairwell/fock_basis.hpp"

namespace pairwell {

namespace {

using nlohmann::json;

json axis_to_json(const AxisSpec& axis) {
    return {{"param", axis.param}, {"lo", axis.lo}, {"hi", axis.hi}, {"count", axis.count}};
}

AxisSpec axis_from_json(const json& j) {
    AxisSpec axis;
    axis.param = j.at("param").get<std::string>();
    axis.lo = j.at("lo").get<double>();
    axis.hi = j.at("hi").get<double>();
    axis.count = j.at("count").get<int>();
    return axis;
}

json params_to_json(const SystemParams& p) {
    return {{"nu", p.nu},       {"alpha", p.alpha},     {"delta", p.delta},
            {"omega", p.omega}, {"omega_z", p.omega_z}, {"f", p.f},
            {"beta1", p.beta1}, {"beta2", p.beta2},     {"u1", p.u1},
            {"u2", p.u2}};
}

SystemParams params_from_json(const json& j) {
    SystemParams p;
    p.nu = j.at("nu").get<double>();
    p.alpha = j.at("alpha").get<double>();
    p.delta = j.at("delta").get<double>();
    p.omega = j.at("omega").get<double>();
    p.omega_z = j.at("omega_z").get<double>();
    p.f = j.at("f").get<double>();
    p.beta1 = j.at("beta1").get<double>();
    p.beta2 = j.at("beta2").get<double>();
    p.u1 = j.at("u1").get<double>();
    p.u2 = j.at("u2").get<double>();
    return p;
}

json expectation_to_json(const Expectation& e) {
    json j{{"type", e.type}};
    if (e.state != 0) j["state"] = e.state;
    if (!e.states.empty()) j["states"] = e.states;
    if (e.value != 0.0) j["value"] = e.value;
    if (e.tol != 0.0) j["tol"] = e.tol;
    if (e.t_a != 0.0) j["t_a"] = e.t_a;
    if (e.t_b != 0.0) j["t_b"] = e.t_b;
    if (e.x != 0.0) j["x"] = e.x;
    if (e.y != 0.0) j["y"] = e.y;
    if (!e.text.empty()) j["text"] = e.text;
    return j;
}

Expectation expectation_from_json(const json& j) {
    Expectation e;
    e.type = j.at("type").get<std::string>();
    e.state = j.value("state", 0);
    e.states = j.value("states", std::vector<int>{});
    e.value = j.value("value", 0.0);
    e.tol = j.value("tol", 0.0);
    e.t_a = j.value("t_a", 0.0);
    e.t_b = j.value("t_b", 0.0);
    e.x = j.value("x", 0.0);
    e.y = j.value("y", 0.0);
    e.text = j.value("text", "");
    return e;
}

}  // namespace

void ScenarioConfig::validate() const {
    try {
        params.validate();
    } catch (const std::invalid_argument& err) {
        throw ConfigError(err.what());
    }
    if (initial_state.empty()) throw ConfigError("initial_state must not be empty");
    double norm = 0.0;
    for (const auto& [label, weight] : initial_state) {
        fock::parse_label(label);  // throws on malformed labels
        norm += std::norm(weight);
    }
    if (!allow_unnormalized && std::abs(norm - 1.0) > 1e-9)
        throw ConfigError("initial_state weights are not normalized (total probability " +
                          std::to_string(norm) + "); set allow_unnormalized to override");
    if (integrator.steps_per_period != 0 && integrator.steps_per_period < 32)
        throw ConfigError("integrator.steps_per_period must be 0 (auto) or >= 32");
    if (!(integrator.t_end > 0.0)) throw ConfigError("integrator.t_end must be positive");
    if (integrator.sample_stride < 0)
        throw ConfigError("integrator.sample_stride must be >= 0 (0 = auto)");
    if (outputs.map && !map) throw ConfigError("map output requested but no map block given");
    if (outputs.curve && !curve)
        throw ConfigError("curve output requested but no curve block given");
    if (outputs.solve && !solve)
        throw ConfigError("solve output requested but no solve block given");
    if (map) {
        try {
            map->validate();
        } catch (const std::invalid_argument& err) {
            throw ConfigError(err.what());
        }
    }
    if (solve && solve->kind != "balance" && solve->kind != "rho_zero")
        throw ConfigError("solve.kind must be 'balance' or 'rho_zero'");
}

Eigen::VectorXcd ScenarioConfig::initial_vector() const {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(fock::kDim);
    for (const auto& [label, weight] : initial_state) psi(fock::parse_label(label) - 1) += weight;
    return psi;
}

nlohmann::json to_json(const ScenarioConfig& config) {
    json j;
    j["name"] = config.name;
    j["params"] = params_to_json(config.params);
    j["channel"] = to_string(config.channel);
    json init = json::array();
    for (const auto& [label, weight] : config.initial_state)
        init.push_back(json::array({label, json::array({weight.real(), weight.imag()})}));
    j["initial_state"] = init;
    j["integrator"] = {{"steps_per_period", config.integrator.steps_per_period},
                       {"t_end", config.integrator.t_end},
                       {"sample_stride", config.integrator.sample_stride},
                       {"verify_step_halving", config.integrator.verify_step_halving},
                       {"convergence_tol", config.integrator.convergence_tol}};
    j["allow_unnormalized"] = config.allow_unnormalized;
    j["reduce_to_subspace"] = config.reduce_to_subspace;
    j["outputs"] = {{"trajectory", config.outputs.trajectory},
                    {"effective_trajectory", config.outputs.effective_trajectory},
                    {"spectrum", config.outputs.spectrum},
                    {"map", config.outputs.map},
                    {"curve", config.outputs.curve},
                    {"solve", config.outputs.solve}};
    if (config.map)
        j["map"] = {{"x", axis_to_json(config.map->x)},
                    {"y", axis_to_json(config.map->y)},
                    {"channel", to_string(config.map->channel)}};
    if (config.curve)
        j["curve"] = {{"sweep", axis_to_json(config.curve->sweep)},
                      {"k_unpaired", config.curve->k_unpaired}};
    if (config.solve) {
        j["solve"] = {{"kind", config.solve->kind},
                      {"parameter", config.solve->parameter},
                      {"lo", config.solve->lo},
                      {"hi", config.solve->hi},
                      {"apply", config.solve->apply}};
        if (config.solve->hint) j["solve"]["hint"] = *config.solve->hint;
    }
    if (!config.expectations.empty()) {
        json checks = json::array();
        for (const auto& e : config.expectations) checks.push_back(expectation_to_json(e));
        j["expect"] = checks;
    }
    if (!config.metadata.is_null()) j["metadata"] = config.metadata;
    return j;
}

ScenarioConfig config_from_json(const nlohmann::json& j) {
    try {
        ScenarioConfig config;
        config.name = j.value("name", "scenario");
        config.params = params_from_json(j.at("params"));
        config.channel = channel_from_string(j.at("channel").get<std::string>());
        const json& init = j.at("initial_state");
        if (init.is_string()) {
            config.initial_state.emplace_back(init.get<std::string>(),
                                              std::complex<double>(1.0, 0.0));
        } else {
            for (const auto& entry : init) {
                const auto label = entry.at(0).get<std::string>();
                const auto& w = entry.at(1);
                config.initial_state.emplace_back(
                    label, std::complex<double>(w.at(0).get<double>(), w.at(1).get<double>()));
            }
        }
        if (j.contains("integrator")) {
            const json& integ = j.at("integrator");
            config.integrator.steps_per_period = integ.value("steps_per_period", 0);
            config.integrator.t_end = integ.value("t_end", 400.0);
            config.integrator.sample_stride = integ.value("sample_stride", 0);
            config.integrator.verify_step_halving = integ.value("verify_step_halving", false);
            config.integrator.convergence_tol = integ.value("convergence_tol", 1e-6);
        }
        config.allow_unnormalized = j.value("allow_unnormalized", false);
        config.reduce_to_subspace = j.value("reduce_to_subspace", true);
        if (j.contains("outputs")) {
            const json& out = j.at("outputs");
            config.outputs.trajectory = out.value("trajectory", false);
            config.outputs.effective_trajectory = out.value("effective_trajectory", false);
            config.outputs.spectrum = out.value("spectrum", false);
            config.outputs.map = out.value("map", false);
            config.outputs.curve = out.value("curve", false);
            config.outputs.solve = out.value("solve", false);
        }
        if (j.contains("map")) {
            GridSpec grid;
            grid.x = axis_from_json(j.at("map").at("x"));
            grid.y = axis_from_json(j.at("map").at("y"));
            grid.fixed = config.params;
            grid.channel = channel_from_string(j.at("map").at("channel").get<std::string>());
            config.map = grid;
        }
        if (j.contains("curve")) {
            CurveSpec curve;
            curve.sweep = axis_from_json(j.at("curve").at("sweep"));
            curve.k_unpaired = j.at("curve").value("k_unpaired", 7);
            config.curve = curve;
        }
        if (j.contains("solve")) {
            SolveSpec solve;
            const json& s = j.at("solve");
            solve.kind = s.value("kind", "balance");
            solve.parameter = s.value("parameter", "f");
            solve.lo = s.at("lo").get<double>();
            solve.hi = s.at("hi").get<double>();
            if (s.contains("hint")) solve.hint = s.at("hint").get<double>();
            solve.apply = s.value("apply", true);
            config.solve = solve;
        }
        if (j.contains("expect"))
            for (const auto& entry : j.at("expect"))
                config.expectations.push_back(expectation_from_json(entry));
        if (j.contains("metadata")) config.metadata = j.at("metadata");
        config.validate();
        return config;
    } catch (const json::exception& err) {
        throw ConfigError(std::string("config parse error: ") + err.what());
    } catch (const std::invalid_argument& err) {
        throw ConfigError(err.what());
    }
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) throw ConfigError("cannot read config file '" + path + "'");
    json j;
    try {
        stream >> j;
    } catch (const json::exception& err) {
        throw ConfigError(std::string("config parse error: ") + err.what());
    }
    return config_from_json(j);
}

}  // namespace pairwell
