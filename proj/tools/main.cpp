// Command-line front end: run scenarios, sweep gains, validate configs.
//
// Exit codes: 0 success, 1 usage error, 2 config error, 3 rotor contact,
// 4 singular gradient, 5 numerical blowup.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ambsim/config.hpp"
#include "ambsim/run_io.hpp"
#include "ambsim/sweep.hpp"

namespace {

constexpr int kExitConfigError = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ambsim::ConfigError("cannot open config file '" + path + "'", 0, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string output_root(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("AMBSIM_OUT_DIR"); env && *env) return env;
    return "runs";
}

std::string default_run_name(const std::string& config_path) {
    const auto stem = std::filesystem::path(config_path).stem().string();
    return stem.empty() ? "run" : stem;
}

ambsim::SweepAxis parse_axis(const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= spec.size()) {
        throw ambsim::ConfigError(
            "axis '" + spec + "' is not of the form section.key=v1,v2,...", 0, 0);
    }
    ambsim::SweepAxis axis;
    axis.key = spec.substr(0, eq);
    std::istringstream values(spec.substr(eq + 1));
    std::string item;
    while (std::getline(values, item, ',')) {
        if (!item.empty()) axis.values.push_back(item);
    }
    if (axis.values.empty()) {
        throw ambsim::ConfigError("axis '" + spec + "' lists no values", 0, 0);
    }
    return axis;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cascaded sliding-mode control simulator for a vertical-axis "
                 "magnetic bearing"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_flag;
    std::string name_flag;
    std::string format = "csv";
    bool plot = false;
    std::uint64_t seed_flag = 0;
    bool seed_set = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "scenario config file")->required();
        cmd->add_option("--set", overrides,
                        "override a key, e.g. --set gains.k=30 (repeatable)");
    };

    CLI::App* cmd_run = app.add_subcommand("run", "execute one scenario");
    add_common(cmd_run);
    cmd_run->add_option("--out", out_flag, "output directory root "
                        "(default $AMBSIM_OUT_DIR or ./runs)");
    cmd_run->add_option("--name", name_flag, "run directory name (default: config stem)");
    cmd_run->add_option("--format", format, "log format: csv|jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    cmd_run->add_flag("--plot", plot, "emit the two SVG figures");
    cmd_run->add_option("--seed", seed_flag, "override the RNG seed")
        ->each([&](const std::string&) { seed_set = true; });

    CLI::App* cmd_sweep = app.add_subcommand("sweep", "run the cross product of axes");
    add_common(cmd_sweep);
    std::vector<std::string> axis_specs;
    std::size_t max_cells = 4096;
    unsigned threads = 0;
    cmd_sweep->add_option("--axis", axis_specs,
                          "swept key, e.g. --axis gains.k=10,25,50 (repeatable)")
        ->required();
    cmd_sweep->add_option("--out", out_flag, "output directory root");
    cmd_sweep->add_option("--name", name_flag, "sweep output name");
    cmd_sweep->add_option("--max-cells", max_cells, "cross-product cap");
    cmd_sweep->add_option("--threads", threads, "worker threads (0 = all cores)");

    CLI::App* cmd_validate =
        app.add_subcommand("validate-config", "parse and validate, never run");
    add_common(cmd_validate);

    CLI11_PARSE(app, argc, argv);

    try {
        if (seed_set) overrides.push_back("scenario.seed=" + std::to_string(seed_flag));

        if (cmd_validate->parsed()) {
            const ambsim::ScenarioConfig cfg =
                ambsim::parse_config(slurp(config_path), overrides);
            std::printf("ok: %s (%s, duration %g s, %llu steps)\n", config_path.c_str(),
                        to_string(cfg.kind), cfg.duration,
                        static_cast<unsigned long long>(cfg.duration / cfg.dt));
            return 0;
        }

        if (cmd_run->parsed()) {
            const ambsim::ScenarioConfig cfg =
                ambsim::parse_config(slurp(config_path), overrides);
            ambsim::RunOutputOptions opts;
            opts.plots = plot;
            opts.format = format == "jsonl" ? ambsim::LogFormat::Jsonl
                                            : ambsim::LogFormat::Csv;
            const std::string name =
                name_flag.empty() ? default_run_name(config_path) : name_flag;
            ambsim::RunResult result;
            const ambsim::RunArtifacts art = ambsim::execute_run_to_directory(
                cfg, output_root(out_flag), name, opts, &result);
            const ambsim::RunMetrics& m = result.metrics;
            std::printf("run %-18s status=%s steps=%llu final_t=%g\n", name.c_str(),
                        to_string(m.status), static_cast<unsigned long long>(m.steps),
                        m.final_time);
            std::printf("  sigma_ss_radius=%g max_abs_tracking_error=%g "
                        "vtilde_convergence_time=%g converged=%d\n",
                        m.sigma_ss_radius, m.max_abs_tracking_error,
                        m.vtilde_convergence_time, m.converged ? 1 : 0);
            std::printf("  artifacts: %s\n", art.directory.c_str());
            return ambsim::exit_code(m.status);
        }

        if (cmd_sweep->parsed()) {
            std::vector<ambsim::SweepAxis> axes;
            axes.reserve(axis_specs.size());
            for (const std::string& spec : axis_specs) axes.push_back(parse_axis(spec));
            ambsim::SweepOptions opts;
            opts.max_cells = max_cells;
            opts.threads = threads;
            const ambsim::SweepResult result =
                ambsim::sweep_runs(slurp(config_path), overrides, axes, opts);

            namespace fs = std::filesystem;
            const std::string name =
                name_flag.empty() ? default_run_name(config_path) + "-sweep" : name_flag;
            const fs::path dir = fs::path(output_root(out_flag)) / name;
            fs::create_directories(dir);
            const fs::path table = dir / "sweep_metrics.csv";
            std::ofstream out(table);
            ambsim::write_sweep_csv(result, out);
            out.flush();
            if (!out) throw std::runtime_error("write to '" + table.string() + "' failed");

            std::size_t failed = 0;
            for (const auto& cell : result.cells) {
                if (!cell.error.empty()) ++failed;
            }
            std::printf("sweep %s: %zu cells (%zu errored) -> %s\n", name.c_str(),
                        result.cells.size(), failed, table.string().c_str());
            return 0;
        }
    } catch (const ambsim::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfigError;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
