// SPDX-License-Identifier: Apache-2.0
//
// beamsim: switched sector-antenna array simulation toolkit for V2X links

#include "beamsim/cli.hpp"

#include "beamsim/config.hpp"
#include "beamsim/csv.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace beamsim {

namespace {

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        throw IoError("cannot read \"" + path + "\"");
    return buffer.str();
}

// Empty path means stdout.
void write_output(const std::string &path, const std::string &content)
{
    if (path.empty()) {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot write \"" + path + "\"");
    out << content;
    out.flush();
    if (!out)
        throw IoError("cannot write \"" + path + "\"");
}

struct CliOptions
{
    std::string config_path;
    std::string out_path;
    std::vector<std::string> overrides;
    std::string mode;
    bool raster = false;
    int threads = 1;
};

LoadedConfig load(const CliOptions &options)
{
    const std::string text =
        options.config_path.empty() ? default_config_text() : read_file(options.config_path);
    std::vector<std::string> overrides = options.overrides;
    if (!options.mode.empty())
        overrides.push_back("mode=" + options.mode);
    return parse_scenario_config(text, overrides);
}

std::string run_pattern(const LoadedConfig &config)
{
    // One row per 0.1 deg over the full normalized angle range.
    const Eigen::Index n = 3600;
    Eigen::VectorXd angles(n);
    for (Eigen::Index k = 0; k < n; ++k)
        angles(k) = static_cast<double>(k - 1799) / 10.0;

    std::ostringstream out;
    write_sweep_csv(gain_table(config.scenario.array, angles), out);
    return out.str();
}

std::string run_sweep(const LoadedConfig &config)
{
    std::ostringstream out;
    write_sweep_csv(rotation_sweep(config.scenario.array, config.sweep_half_range_deg,
                                   config.sweep_step_deg),
                    out);
    return out.str();
}

std::string run_link(const LoadedConfig &config)
{
    std::ostringstream out;
    write_link_csv(distance_run(config.scenario, config.distances_m), out);
    return out.str();
}

std::string run_coverage(const LoadedConfig &config, bool raster, int threads)
{
    if (!config.coverage)
        throw ConfigError("config: \"coverage\" block is required for the coverage command");
    const CoverageSpec &spec = *config.coverage;
    const ScenarioConfig &s = config.scenario;

    LinkBudget budget_template;
    budget_template.tx_power_dbm = s.tx_power_dbm;
    budget_template.tx_losses_db =
        s.tx_extra_losses_db +
        (spec.selection.is_element() ? s.switch_model.insertion_loss_db : 0.0);
    budget_template.rx_gain_dbi = s.rx_gain_dbi;
    budget_template.rx_losses_db = s.rx_losses_db;

    const CoverageGrid grid =
        coverage_grid(s.environment, spec.tx, s.array, spec.selection, spec.heading,
                      budget_template, s.frequency_hz, spec.region, s.propagation, threads);

    std::ostringstream out;
    if (raster)
        write_coverage_raster(grid, out);
    else
        write_coverage_csv(grid, out);
    return out.str();
}

std::string run_trajectory(const LoadedConfig &config)
{
    std::ostringstream out;
    write_run_csv(run_scenario(config.scenario), out);
    return out.str();
}

std::string run_compare(const LoadedConfig &config)
{
    ScenarioConfig switched = config.scenario;
    switched.mode = RunMode::Switched;
    ScenarioConfig omni = config.scenario;
    omni.mode = RunMode::OmniOnly;

    std::ostringstream out;
    write_compare_csv(compare_runs(run_scenario(switched), run_scenario(omni)), out);
    return out.str();
}

} // namespace

int run_cli(int argc, const char *const *argv)
{
    CLI::App app{"beamsim: switched sector-antenna array link and coverage simulator"};
    app.require_subcommand(1);

    CliOptions options;
    CLI::App *pattern = app.add_subcommand("pattern", "Per-element gain vs angle at 0.1 deg");
    CLI::App *sweep = app.add_subcommand("sweep", "Element gains over the rotation range");
    CLI::App *link = app.add_subcommand("link", "Received power over distance per selection");
    CLI::App *coverage = app.add_subcommand("coverage", "Received-power grid around a transmitter");
    CLI::App *run = app.add_subcommand("run", "Trajectory run with automatic beam switching");
    CLI::App *compare = app.add_subcommand("compare", "Switched vs omni RSSI delta per sample");

    for (CLI::App *sub : {pattern, sweep, link, coverage, run, compare}) {
        sub->add_option("--config", options.config_path, "Configuration file (JSON)");
        sub->add_option("--out", options.out_path, "Output file (default: stdout)");
        sub->add_option("--set", options.overrides, "Override, dotted key=value (repeatable)");
    }
    run->add_option("--mode", options.mode, "Run mode")
        ->check(CLI::IsMember({"switched", "omni"}));
    coverage->add_flag("--raster", options.raster, "Emit an ASCII raster instead of CSV");
    coverage->add_option("--threads", options.threads, "Worker threads for grid evaluation")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 1;
    }

    try {
        const LoadedConfig config = load(options);
        std::string content;
        if (pattern->parsed())
            content = run_pattern(config);
        else if (sweep->parsed())
            content = run_sweep(config);
        else if (link->parsed())
            content = run_link(config);
        else if (coverage->parsed())
            content = run_coverage(config, options.raster, options.threads);
        else if (run->parsed())
            content = run_trajectory(config);
        else
            content = run_compare(config);
        write_output(options.out_path, content);
        return 0;
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace beamsim
