#include "ambsim/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "ambsim/config.hpp"

namespace ambsim {

std::uint64_t cell_seed(std::uint64_t base_seed, std::uint64_t cell_index) {
    // cell 0 of an axis-free sweep must reproduce a plain run
    return base_seed + cell_index;
}

SweepResult sweep_runs(const std::string& config_text,
                       const std::vector<std::string>& base_overrides,
                       const std::vector<SweepAxis>& axes,
                       const SweepOptions& opts) {
    // the base must parse before any cell starts
    const ScenarioConfig base = parse_config(config_text, base_overrides);

    std::size_t cells = 1;
    for (const SweepAxis& axis : axes) {
        if (axis.values.empty()) {
            throw ConfigError("sweep axis '" + axis.key + "' has no values", 0, 0);
        }
        if (axis.values.size() > opts.max_cells / cells) {
            throw ConfigError("sweep cross product exceeds the cell cap of " +
                                  std::to_string(opts.max_cells), 0, 0);
        }
        cells *= axis.values.size();
    }

    SweepResult result;
    for (const SweepAxis& axis : axes) result.axis_keys.push_back(axis.key);
    result.cells.resize(cells);

    auto cell_values = [&](std::size_t index) {
        // first axis varies slowest
        std::vector<std::string> values(axes.size());
        std::size_t rem = index;
        for (std::size_t a = axes.size(); a-- > 0;) {
            values[a] = axes[a].values[rem % axes[a].values.size()];
            rem /= axes[a].values.size();
        }
        return values;
    };

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t index = next.fetch_add(1); index < cells;
             index = next.fetch_add(1)) {
            SweepCell& cell = result.cells[index];
            cell.index = index;
            cell.values = cell_values(index);
            cell.seed = cell_seed(base.seed, index);
            try {
                std::vector<std::string> overrides = base_overrides;
                for (std::size_t a = 0; a < axes.size(); ++a) {
                    overrides.push_back(axes[a].key + "=" + cell.values[a]);
                }
                overrides.push_back("scenario.seed=" + std::to_string(cell.seed));
                const ScenarioConfig cfg = parse_config(config_text, overrides);
                cell.metrics = run(cfg).metrics;
            } catch (const std::exception& e) {
                cell.error = e.what();
            }
        }
    };

    unsigned threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    threads = std::max(1u, std::min<unsigned>(threads, cells));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    return result;
}

namespace {

std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
    for (const std::string& key : result.axis_keys) out << key << ',';
    out << "cell_index,seed,status,converged,sigma_ss_radius,"
           "max_abs_tracking_error,vtilde_convergence_time,tol_v,"
           "singularity_events,delta1_estimate,steps,final_time,error\n";
    for (const SweepCell& cell : result.cells) {
        for (const std::string& v : cell.values) out << v << ',';
        const RunMetrics& m = cell.metrics;
        out << cell.index << ',' << cell.seed << ','
            << (cell.error.empty() ? to_string(m.status) : "error") << ','
            << (m.converged ? 1 : 0) << ',' << fmt(m.sigma_ss_radius) << ','
            << fmt(m.max_abs_tracking_error) << ','
            << fmt(m.vtilde_convergence_time) << ',' << fmt(m.tol_v) << ','
            << m.singularity_events << ',' << fmt(m.delta1_estimate) << ','
            << m.steps << ',' << fmt(m.final_time) << ',';
        // commas inside an error message would shift columns
        std::string err = cell.error;
        for (char& ch : err) {
            if (ch == ',' || ch == '\n') ch = ';';
        }
        out << err << '\n';
    }
}

}  // namespace ambsim
