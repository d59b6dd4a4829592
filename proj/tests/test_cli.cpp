#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "pairwell/config.hpp"
#include "pairwell/errors.hpp"
#include "pairwell/manifest.hpp"
#include "pairwell/presets.hpp"
#include "pairwell/runner.hpp"

using namespace pairwell;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream stream(path, std::ios::binary);
    REQUIRE(stream.good());
    return {std::istreambuf_iterator<char>(stream), std::istreambuf_iterator<char>()};
}

fs::path fresh_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("pairwell_test_" + tag);
    fs::remove_all(dir);
    return dir;
}

ScenarioConfig short_fig1c() {
    ScenarioConfig config = make_preset("fig1c");
    config.integrator.t_end = 40.0;
    config.integrator.steps_per_period = 1024;
    config.integrator.sample_stride = 128;
    config.expectations.clear();  // thresholds need the full horizon
    return config;
}

}  // namespace

TEST_CASE("every preset serializes and parses back unchanged") {
    for (const auto& name : preset_names()) {
        const ScenarioConfig preset = make_preset(name);
        const nlohmann::json once = to_json(preset);
        const ScenarioConfig reparsed = config_from_json(once);
        CHECK(to_json(reparsed).dump() == once.dump());
        CHECK(reparsed.params == preset.params);
    }
    CHECK_THROWS_AS(make_preset("fig9"), ConfigError);
}

TEST_CASE("config schema violations are rejected") {
    nlohmann::json j = to_json(make_preset("fig1c"));
    j.erase("params");
    CHECK_THROWS_AS(config_from_json(j), ConfigError);

    j = to_json(make_preset("fig1c"));
    j["params"]["omega"] = -1.0;
    CHECK_THROWS_AS(config_from_json(j), ConfigError);

    j = to_json(make_preset("fig1c"));
    j["initial_state"] = nlohmann::json::array(
        {nlohmann::json::array({"|0020>", nlohmann::json::array({0.5, 0.0})})});
    CHECK_THROWS_AS(config_from_json(j), ConfigError);  // unnormalized
    j["allow_unnormalized"] = true;
    CHECK_NOTHROW(config_from_json(j));

    j = to_json(make_preset("fig1c"));
    j["channel"] = "sideways";
    CHECK_THROWS_AS(config_from_json(j), ConfigError);

    j = to_json(make_preset("fig1c"));
    j["initial_state"] = "|00200>";
    CHECK_THROWS_AS(config_from_json(j), ConfigError);
}

TEST_CASE("run writes the requested products and a checksummed manifest") {
    const ScenarioConfig config = short_fig1c();
    const fs::path dir = fresh_dir("run");
    RunOptions options;
    options.out_dir = dir.string();
    options.quiet = true;
    CHECK(run_scenario(config, options) == kExitOk);
    for (const char* name : {"trajectory.csv", "effective.csv", "spectrum.csv", "manifest.json"})
        CHECK(fs::exists(dir / name));
    CHECK_FALSE(fs::exists(dir / "map.csv"));

    const nlohmann::json manifest = nlohmann::json::parse(slurp(dir / "manifest.json"));
    CHECK(manifest.at("checksum_algorithm") == "fnv1a64");
    const std::string traj = slurp(dir / "trajectory.csv");
    CHECK(manifest.at("outputs").at("trajectory.csv").at("fnv1a64") == fnv1a64_hex(traj));
    CHECK(manifest.at("outputs").at("trajectory.csv").at("bytes") == traj.size());
    CHECK(manifest.at("inputs").at("params").at("f") == 32.0);
    fs::remove_all(dir);
}

TEST_CASE("reruns are byte-identical for any worker count") {
    const ScenarioConfig config = short_fig1c();
    const fs::path a = fresh_dir("det_a");
    const fs::path b = fresh_dir("det_b");
    RunOptions options;
    options.quiet = true;
    options.out_dir = a.string();
    options.workers = 1;
    REQUIRE(run_scenario(config, options) == kExitOk);
    options.out_dir = b.string();
    options.workers = 4;
    REQUIRE(run_scenario(config, options) == kExitOk);
    CHECK(slurp(a / "manifest.json") == slurp(b / "manifest.json"));
    CHECK(slurp(a / "trajectory.csv") == slurp(b / "trajectory.csv"));
    CHECK(slurp(a / "effective.csv") == slurp(b / "effective.csv"));
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST_CASE("resonant parameters exit with the precondition code") {
    ScenarioConfig config = short_fig1c();
    config.params.u1 = 20.0;  // 2 u1 = omega exactly
    config.outputs.trajectory = false;
    config.outputs.effective_trajectory = false;
    RunOptions options;
    options.out_dir = fresh_dir("res").string();
    options.quiet = true;
    CHECK(run_scenario(config, options) == kExitPreconditionError);
    fs::remove_all(options.out_dir);
}

TEST_CASE("hopeless solver bracket exits with the solver code") {
    ScenarioConfig config = make_preset("fig2a");
    config.solve->lo = 0.05;
    config.solve->hi = 0.1;
    config.integrator.t_end = 5.0;
    config.expectations.clear();
    RunOptions options;
    options.out_dir = fresh_dir("nosign").string();
    options.quiet = true;
    CHECK(run_scenario(config, options) == kExitSolverError);
    fs::remove_all(options.out_dir);
}

TEST_CASE("violated expectations fail the run") {
    ScenarioConfig config = short_fig1c();
    Expectation impossible;
    impossible.type = "pbar_above";
    impossible.state = 7;
    impossible.value = 0.9;
    config.expectations.push_back(impossible);
    RunOptions options;
    options.out_dir = fresh_dir("expect").string();
    options.quiet = true;
    CHECK(run_scenario(config, options) == kExitChecksFailed);
    fs::remove_all(options.out_dir);
}

TEST_CASE("compare reports agreement in the far-resonance regime") {
    ScenarioConfig config = make_preset("fig1c");
    config.integrator.t_end = 100.0;
    const fs::path dir = fresh_dir("cmp_far");
    RunOptions options;
    options.out_dir = dir.string();
    options.quiet = true;
    REQUIRE(compare_scenario(config, options) == kExitOk);
    const nlohmann::json report = nlohmann::json::parse(slurp(dir / "report.json"));
    CHECK(report.at("max_deviation_paired").get<double>() < 0.05);
    CHECK(report.at("unpaired_pbar").get<double>() < 0.02);
    CHECK_FALSE(report.at("near_resonance").get<bool>());
    for (const auto& residual : report.at("quasienergy_residuals"))
        CHECK(residual.get<double>() < 5e-3);
    fs::remove_all(dir);
}

TEST_CASE("compare flags the near-resonance point") {
    ScenarioConfig config = make_preset("fig1d");
    config.integrator.t_end = 100.0;
    const fs::path dir = fresh_dir("cmp_near");
    RunOptions options;
    options.out_dir = dir.string();
    options.quiet = true;
    REQUIRE(compare_scenario(config, options) == kExitOk);
    const nlohmann::json report = nlohmann::json::parse(slurp(dir / "report.json"));
    CHECK(report.at("near_resonance").get<bool>());
    CHECK(report.at("unpaired_pbar").get<double>() > 0.02);
    // the effective model keeps the unpaired state empty, so its deviation
    // tracks the real occupation
    CHECK(report.at("max_deviation_per_state").at("P7").get<double>() >
          report.at("unpaired_pbar").get<double>());
    fs::remove_all(dir);
}

TEST_CASE("compare is exact without tunneling") {
    ScenarioConfig config = make_preset("fig1c");
    config.params.nu = 0.0;
    config.params.beta1 = config.params.beta2 = 0.0;
    config.integrator.t_end = 20.0;
    const fs::path dir = fresh_dir("cmp_nu0");
    RunOptions options;
    options.out_dir = dir.string();
    options.quiet = true;
    REQUIRE(compare_scenario(config, options) == kExitOk);
    const nlohmann::json report = nlohmann::json::parse(slurp(dir / "report.json"));
    for (const auto& [key, value] : report.at("max_deviation_per_state").items())
        CHECK(value.get<double>() < 1e-10);
    fs::remove_all(dir);
}

TEST_CASE("fnv1a64 fingerprints") {
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a64_hex("pairwell") != fnv1a64_hex("pairwall"));
}
