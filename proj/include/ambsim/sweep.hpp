#pragma once

// Parameter sweeps: the cross product of per-key value lists, one run per
// cell, executed concurrently. Cells are independent; each derives its seed
// deterministically from the base seed and its index, so a sweep is
// reproducible regardless of thread scheduling. A failing cell records its
// error and the sweep carries on.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ambsim/scenario.hpp"
#include "ambsim/sim.hpp"

namespace ambsim {

/// One swept key, e.g. {"gains.k", {"10", "25", "50"}}.
struct SweepAxis {
    std::string key;
    std::vector<std::string> values;
};

struct SweepCell {
    std::size_t index = 0;
    std::vector<std::string> values;  ///< one value per axis, cross-product order
    std::uint64_t seed = 0;
    RunMetrics metrics;
    std::string error;  ///< empty on success
};

struct SweepResult {
    std::vector<std::string> axis_keys;
    std::vector<SweepCell> cells;
};

struct SweepOptions {
    std::size_t max_cells = 4096;
    unsigned threads = 0;  ///< 0: hardware concurrency
};

/// Deterministic per-cell seed: base seed plus cell index.
std::uint64_t cell_seed(std::uint64_t base_seed, std::uint64_t cell_index);

/// Run the sweep over a config document. base_overrides apply to every
/// cell (before the axis assignments). Throws ConfigError if the base
/// document itself is invalid or the cross product exceeds max_cells.
SweepResult sweep_runs(const std::string& config_text,
                       const std::vector<std::string>& base_overrides,
                       const std::vector<SweepAxis>& axes,
                       const SweepOptions& opts = {});

/// Metrics table: swept keys first, then seed, status and metric columns.
void write_sweep_csv(const SweepResult& result, std::ostream& out);

}  // namespace ambsim
