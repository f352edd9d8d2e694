#include "ambsim/run_io.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "ambsim/config.hpp"
#include "ambsim/csv.hpp"
#include "ambsim/plot.hpp"

namespace ambsim {

RunArtifacts execute_run_to_directory(const ScenarioConfig& cfg,
                                      const std::string& out_root,
                                      const std::string& name,
                                      const RunOutputOptions& opts,
                                      RunResult* result_out) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::path(out_root) / name;
    fs::create_directories(dir);

    RunArtifacts art;
    art.directory = dir.string();
    art.config_path = (dir / "config_resolved.cfg").string();
    {
        std::ofstream out(art.config_path);
        if (!out) throw std::runtime_error("cannot write '" + art.config_path + "'");
        out << render_config(cfg);
    }

    RunResult result = run(cfg);

    if (opts.format == LogFormat::Csv) {
        art.log_path = (dir / "log.csv").string();
        write_csv_file(result.records, art.log_path);
    } else {
        art.log_path = (dir / "log.jsonl").string();
        write_jsonl_file(result.records, art.log_path);
    }

    art.metrics_path = (dir / "metrics.json").string();
    write_metrics_file(result.metrics, art.metrics_path);

    if (!result.events.empty()) {
        std::ofstream out(dir / "events.jsonl");
        for (const RunEvent& ev : result.events) {
            nlohmann::ordered_json j;
            j["t"] = ev.t;
            j["kind"] = ev.kind;
            j["value"] = ev.value;
            out << j.dump() << '\n';
        }
    }

    if (opts.plots && !result.records.empty()) {
        art.plot_paths = emit_plots(result.records, cfg.plant, name, dir.string());
    }

    if (result_out) *result_out = std::move(result);
    return art;
}

}  // namespace ambsim
