#pragma once

// Static multi-panel figures rendered directly as SVG (vector output, no
// plotting toolchain required). Two figures per run:
//   <name>_state.svg : z with its reference, current with its reference,
//                      sliding variable, force disturbance
//   <name>_input.svg : commanded vs generated scaled force, input error,
//                      coil voltage
// Each data series carries a data-name attribute so tooling and tests can
// locate it structurally.

#include <string>
#include <vector>

#include "ambsim/plant.hpp"
#include "ambsim/sim.hpp"

namespace ambsim {

/// One panel series: points sampled against the shared time axis.
struct PlotSeries {
    std::string name;
    std::vector<double> y;
};

struct PlotPanel {
    std::string title;
    std::string y_label;
    std::vector<PlotSeries> series;
};

/// Render stacked panels over a shared time axis into an SVG document.
std::string render_svg(const std::vector<double>& t,
                       const std::vector<PlotPanel>& panels,
                       const std::string& title);

/// Write `<run_name>_state.svg` and `<run_name>_input.svg` under out_dir.
/// The generated-force series is reconstructed from the logged state via
/// the force map, which needs the plant constants. Returns the two paths.
std::vector<std::string> emit_plots(const std::vector<SimRecord>& records,
                                    const PlantParams& plant,
                                    const std::string& run_name,
                                    const std::string& out_dir);

}  // namespace ambsim
