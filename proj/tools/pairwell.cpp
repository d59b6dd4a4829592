#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "pairwell/csv.hpp"
#include "pairwell/errors.hpp"
#include "pairwell/presets.hpp"
#include "pairwell/runner.hpp"
#include "pairwell/version.hpp"

namespace {

int env_workers() {
    const char* value = std::getenv("PAIRWELL_WORKERS");
    if (value == nullptr) return 1;
    const int workers = std::atoi(value);
    return workers > 0 ? workers : 1;
}

/// `run` and `compare` accept either a config file path or a preset name.
pairwell::ScenarioConfig resolve_scenario(const std::string& source) {
    if (std::filesystem::exists(source)) return pairwell::load_config(source);
    const auto names = pairwell::preset_names();
    for (const auto& name : names)
        if (name == source) return pairwell::make_preset(name);
    throw pairwell::ConfigError("'" + source + "' is neither a config file nor a preset name");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pairwell: driven non-Hermitian double-well pair-tunneling simulator"};
    app.set_version_flag("--version", pairwell::kVersion);
    app.require_subcommand(1);

    std::string source;
    std::string out_dir;
    long seed = 0;
    bool seed_given = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("scenario", source, "config file path or preset name")->required();
        cmd->add_option("--out", out_dir, "output directory (default runs/<name>)");
        cmd->add_option("--seed", seed, "recorded in the manifest; the pipeline is deterministic")
            ->each([&](const std::string&) { seed_given = true; });
    };

    CLI::App* run_cmd = app.add_subcommand("run", "execute a scenario and write its products");
    add_common(run_cmd);
    CLI::App* compare_cmd =
        app.add_subcommand("compare", "exact vs effective comparison report");
    add_common(compare_cmd);

    std::string preset_name;
    std::string emit_path;
    CLI::App* preset_cmd = app.add_subcommand("preset", "emit a preset's resolved config");
    preset_cmd->add_option("name", preset_name, "preset name")->required();
    preset_cmd->add_option("--emit-config", emit_path,
                           "write the resolved config JSON here (default stdout)")
        ->expected(0, 1);

    CLI::App* list_cmd = app.add_subcommand("list-presets", "list built-in scenario presets");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list_cmd->parsed()) {
            for (const auto& name : pairwell::preset_names()) std::cout << name << "\n";
            return pairwell::kExitOk;
        }
        if (preset_cmd->parsed()) {
            const auto config = pairwell::make_preset(preset_name);
            const std::string text = pairwell::to_json(config).dump(2) + "\n";
            if (emit_path.empty())
                std::cout << text;
            else
                pairwell::csv::write_file(emit_path, text);
            return pairwell::kExitOk;
        }
        const pairwell::ScenarioConfig config = resolve_scenario(source);
        pairwell::RunOptions options;
        options.out_dir = out_dir.empty() ? "runs/" + config.name : out_dir;
        options.workers = env_workers();
        if (seed_given) options.seed = seed;
        if (run_cmd->parsed()) return pairwell::run_scenario(config, options);
        return pairwell::compare_scenario(config, options);
    } catch (const pairwell::ConfigError& err) {
        nlohmann::json record{{"error", "config"}, {"detail", err.what()}};
        std::cerr << record.dump() << "\n";
        return pairwell::kExitConfigError;
    }
}
