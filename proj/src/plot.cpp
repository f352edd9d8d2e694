#include "ambsim/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ambsim {

namespace {

constexpr int kWidth = 960;
constexpr int kPanelHeight = 220;
constexpr int kMarginLeft = 86;
constexpr int kMarginRight = 24;
constexpr int kMarginTop = 46;
constexpr int kPanelGap = 34;
constexpr int kMarginBottom = 56;
constexpr std::size_t kMaxPoints = 1600;

const char* kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728"};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Range {
    double lo = 0.0;
    double hi = 1.0;
};

Range nice_range(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) return {0.0, 1.0};
    if (lo > hi) std::swap(lo, hi);
    const double span = hi - lo;
    const double pad = span > 0.0 ? 0.08 * span
                                  : std::max(1e-12, 0.5 * std::abs(hi) + 1e-12);
    return {lo - pad, hi + pad};
}

double map_x(double t, double t0, double t1, double x0, double x1) {
    if (t1 == t0) return x0;
    return x0 + (t - t0) / (t1 - t0) * (x1 - x0);
}

}  // namespace

std::string render_svg(const std::vector<double>& t,
                       const std::vector<PlotPanel>& panels,
                       const std::string& title) {
    if (t.empty()) throw std::invalid_argument("render_svg: empty time axis");
    const int height = kMarginTop +
                       static_cast<int>(panels.size()) * (kPanelHeight + kPanelGap) -
                       kPanelGap + kMarginBottom;
    const double t0 = t.front();
    const double t1 = t.back();
    const double x0 = kMarginLeft;
    const double x1 = kWidth - kMarginRight;
    const std::size_t stride = std::max<std::size_t>(1, t.size() / kMaxPoints);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << kWidth << " "
        << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"26\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";

    int panel_top = kMarginTop;
    for (const PlotPanel& panel : panels) {
        const double y_top = panel_top;
        const double y_bot = panel_top + kPanelHeight;

        double lo = INFINITY;
        double hi = -INFINITY;
        for (const PlotSeries& s : panel.series) {
            for (std::size_t k = 0; k < s.y.size(); k += stride) {
                if (std::isfinite(s.y[k])) {
                    lo = std::min(lo, s.y[k]);
                    hi = std::max(hi, s.y[k]);
                }
            }
        }
        if (!std::isfinite(lo)) { lo = 0.0; hi = 1.0; }
        const Range range = nice_range(lo, hi);

        svg << "<g class=\"panel\">\n";
        svg << "<rect x=\"" << x0 << "\" y=\"" << y_top << "\" width=\""
            << x1 - x0 << "\" height=\"" << kPanelHeight
            << "\" fill=\"none\" stroke=\"#444\"/>\n";
        svg << "<text x=\"" << x0 << "\" y=\"" << y_top - 8
            << "\" font-family=\"sans-serif\" font-size=\"13\">" << panel.title
            << "</text>\n";
        svg << "<text x=\"18\" y=\"" << (y_top + y_bot) / 2
            << "\" font-family=\"sans-serif\" font-size=\"12\" "
               "text-anchor=\"middle\" transform=\"rotate(-90 18 "
            << (y_top + y_bot) / 2 << ")\">" << panel.y_label << "</text>\n";

        for (int tick = 0; tick <= 4; ++tick) {
            const double frac = tick / 4.0;
            const double y_val = range.lo + (range.hi - range.lo) * frac;
            const double y_px = y_bot - frac * kPanelHeight;
            svg << "<line x1=\"" << x0 << "\" y1=\"" << y_px << "\" x2=\"" << x1
                << "\" y2=\"" << y_px << "\" stroke=\"#ddd\"/>\n";
            svg << "<text x=\"" << x0 - 6 << "\" y=\"" << y_px + 4
                << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
                   "font-size=\"11\">" << num(y_val) << "</text>\n";
            const double t_val = t0 + (t1 - t0) * frac;
            const double x_px = map_x(t_val, t0, t1, x0, x1);
            svg << "<text x=\"" << x_px << "\" y=\"" << y_bot + 16
                << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
                   "font-size=\"11\">" << num(t_val) << "</text>\n";
        }

        int color_idx = 0;
        double legend_x = x1 - 10;
        for (const PlotSeries& s : panel.series) {
            const char* color = kColors[color_idx % 4];
            svg << "<polyline class=\"series\" data-name=\"" << s.name
                << "\" fill=\"none\" stroke=\"" << color
                << "\" stroke-width=\"1.2\" points=\"";
            for (std::size_t k = 0; k < s.y.size(); k += stride) {
                if (!std::isfinite(s.y[k])) continue;
                const double frac = (s.y[k] - range.lo) / (range.hi - range.lo);
                svg << num(map_x(t[k], t0, t1, x0, x1)) << ','
                    << num(y_bot - frac * kPanelHeight) << ' ';
            }
            svg << "\"/>\n";
            svg << "<text x=\"" << legend_x << "\" y=\"" << y_top + 16
                << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
                   "font-size=\"12\" fill=\"" << color << "\">" << s.name
                << "</text>\n";
            legend_x -= 64;
            ++color_idx;
        }
        svg << "</g>\n";
        panel_top += kPanelHeight + kPanelGap;
    }
    svg << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << height - 16
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"12\">t [s]</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

std::vector<std::string> emit_plots(const std::vector<SimRecord>& records,
                                    const PlantParams& plant,
                                    const std::string& run_name,
                                    const std::string& out_dir) {
    if (records.empty()) throw std::invalid_argument("emit_plots: empty log");
    std::vector<double> t;
    t.reserve(records.size());
    auto column = [&](auto&& get) {
        std::vector<double> col;
        col.reserve(records.size());
        for (const SimRecord& r : records) col.push_back(get(r));
        return col;
    };
    for (const SimRecord& r : records) t.push_back(r.t);

    std::vector<PlotPanel> state_panels;
    state_panels.push_back(PlotPanel{
        "axle position and reference", "z [m]",
        {PlotSeries{"z", column([](const SimRecord& r) { return r.z; })},
         PlotSeries{"r", column([](const SimRecord& r) { return r.r; })}}});
    state_panels.push_back(PlotPanel{
        "deviation current and reference", "i [A]",
        {PlotSeries{"i", column([](const SimRecord& r) { return r.i; })},
         PlotSeries{"i_ref", column([](const SimRecord& r) { return r.i_ref; })}}});
    state_panels.push_back(PlotPanel{
        "sliding variable", "sigma [m/s]",
        {PlotSeries{"sigma", column([](const SimRecord& r) { return r.sigma; })}}});
    state_panels.push_back(PlotPanel{
        "force disturbance", "q_z [m/s^2]",
        {PlotSeries{"q_z", column([](const SimRecord& r) { return r.q_z; })}}});

    std::vector<PlotPanel> input_panels;
    input_panels.push_back(PlotPanel{
        "commanded and generated scaled force", "v [A^2/m^2]",
        {PlotSeries{"v_star", column([](const SimRecord& r) { return r.v_star; })},
         PlotSeries{"v", column([&](const SimRecord& r) {
                        return std::abs(r.z) < plant.s0
                                   ? virtual_input(plant, r.z, r.i)
                                   : NAN;
                    })}}});
    input_panels.push_back(PlotPanel{
        "input estimation error", "v_tilde",
        {PlotSeries{"v_tilde", column([](const SimRecord& r) { return r.v_tilde; })}}});
    input_panels.push_back(PlotPanel{
        "coil voltage", "u [V]",
        {PlotSeries{"u", column([](const SimRecord& r) { return r.u; })}}});

    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    std::vector<std::string> paths;
    for (const auto& [suffix, panels] :
         {std::pair{"_state.svg", &state_panels}, std::pair{"_input.svg", &input_panels}}) {
        const fs::path path = fs::path(out_dir) / (run_name + suffix);
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
        out << render_svg(t, *panels, run_name);
        paths.push_back(path.string());
    }
    return paths;
}

}  // namespace ambsim
