#pragma once

// Materialize one run on disk. A run directory is self-contained:
//   config_resolved.cfg   every default materialized; re-running it
//                         reproduces the log bit-exactly
//   log.csv | log.jsonl   the record stream
//   metrics.json          one key per metric
//   events.jsonl          out-of-band events (only when any occurred)
//   <name>_state.svg,
//   <name>_input.svg      optional figures

#include <string>

#include "ambsim/scenario.hpp"
#include "ambsim/sim.hpp"

namespace ambsim {

enum class LogFormat { Csv, Jsonl };

struct RunOutputOptions {
    LogFormat format = LogFormat::Csv;
    bool plots = false;
};

struct RunArtifacts {
    std::string directory;
    std::string config_path;
    std::string log_path;
    std::string metrics_path;
    std::vector<std::string> plot_paths;
};

/// Execute the run and write the run directory. `name` becomes the
/// directory leaf and the plot-file prefix.
RunArtifacts execute_run_to_directory(const ScenarioConfig& cfg,
                                      const std::string& out_root,
                                      const std::string& name,
                                      const RunOutputOptions& opts,
                                      RunResult* result_out = nullptr);

}  // namespace ambsim
