#include "ambsim/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ambsim {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

[[noreturn]] void fail(const std::string& msg, int line, int column) {
    throw ConfigError(msg, line, column);
}

double parse_number(const std::string& value, const std::string& key, int line,
                    int column) {
    const std::string v = trim(value);
    char* end = nullptr;
    const double parsed = std::strtod(v.c_str(), &end);
    if (v.empty() || end != v.c_str() + v.size()) {
        fail("key '" + key + "': expected a number, got '" + v + "'", line, column);
    }
    return parsed;
}

std::uint64_t parse_u64(const std::string& value, const std::string& key, int line,
                        int column) {
    const std::string v = trim(value);
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        fail("key '" + key + "': expected a non-negative integer, got '" + v + "'",
             line, column);
    }
    return out;
}

SgnMode parse_sgn(const std::string& value, const std::string& key, int line,
                  int column) {
    const std::string v = trim(value);
    if (v == "ideal") return SgnMode::Ideal;
    if (v == "approx") return SgnMode::Approx;
    fail("key '" + key + "': expected ideal|approx, got '" + v + "'", line, column);
}

std::optional<SgnMode> parse_sgn_opt(const std::string& value, const std::string& key,
                                     int line, int column) {
    if (trim(value) == "inherit") return std::nullopt;
    return parse_sgn(value, key, line, column);
}

}  // namespace

ConfigError::ConfigError(std::string message, int line, int column)
    : std::runtime_error(line > 0 ? std::to_string(line) + ":" +
                                        std::to_string(column) + ": " + message
                                  : message),
      line_(line),
      column_(column) {}

void assign_config_key(ScenarioConfig& cfg, const std::string& section,
                       const std::string& key, const std::string& value,
                       int line, int column) {
    auto num = [&] { return parse_number(value, section + "." + key, line, column); };
    const std::string full = section.empty() ? key : section + "." + key;

    if (section == "plant") {
        if (key == "m") cfg.plant.m = num();
        else if (key == "k_z") cfg.plant.k_z = num();
        else if (key == "mu0") cfg.plant.mu0 = num();
        else if (key == "n") cfg.plant.n = num();
        else if (key == "A") cfg.plant.A = num();
        else if (key == "s0") cfg.plant.s0 = num();
        else if (key == "i0") cfg.plant.i0 = num();
        else if (key == "R") cfg.plant.R = num();
        else if (key == "g") cfg.plant.g = num();
        else fail("unknown key '" + full + "'", line, column);
        return;
    }
    if (section == "gains") {
        if (key == "c") cfg.gains.c = num();
        else if (key == "k") cfg.gains.k = num();
        else if (key == "gamma") cfg.gains.gamma = num();
        else if (key == "k_i") cfg.gains.k_i = num();
        else if (key == "p") cfg.gains.p = num();
        else if (key == "Q_z") cfg.gains.Q_z = num();
        else if (key == "Q_i") cfg.gains.Q_i = num();
        else fail("unknown key '" + full + "'", line, column);
        return;
    }
    if (section == "scenario") {
        if (key == "kind") {
            const std::string v = trim(value);
            if (v == "regulation") cfg.kind = ScenarioKind::Regulation;
            else if (v == "tracking") cfg.kind = ScenarioKind::Tracking;
            else fail("key 'scenario.kind': expected regulation|tracking, got '" + v + "'",
                      line, column);
        } else if (key == "A_r") cfg.A_r = num();
        else if (key == "f_r") cfg.f_r = num();
        else if (key == "duration") cfg.duration = num();
        else if (key == "seed") cfg.seed = parse_u64(value, full, line, column);
        else if (key == "noise_value") cfg.noise_value = num();
        else if (key == "noise_interpretation") {
            const std::string v = trim(value);
            if (v == "variance") cfg.noise_interpretation = NoiseInterpretation::Variance;
            else if (v == "std") cfg.noise_interpretation = NoiseInterpretation::StdDev;
            else fail("key 'scenario.noise_interpretation': expected variance|std, got '" +
                      v + "'", line, column);
        } else if (key == "z0") cfg.initial.z0 = num();
        else if (key == "z_dot0") cfg.initial.z_dot0 = num();
        else if (key == "i0") {
            if (trim(value) == "warm") cfg.initial.i0.reset();
            else cfg.initial.i0 = num();
        } else if (key == "i_ref0") {
            if (trim(value) == "warm") {
                cfg.initial.i_ref_warm_start = true;
            } else {
                cfg.initial.i_ref_warm_start = false;
                cfg.initial.i_ref0 = num();
            }
        } else fail("unknown key '" + full + "'", line, column);
        return;
    }
    if (section == "scenario.pulse") {
        if (key == "t_on") cfg.pulse.t_on = num();
        else if (key == "t_off") cfg.pulse.t_off = num();
        else if (key == "amplitude") cfg.pulse.amplitude = num();
        else fail("unknown key '" + full + "'", line, column);
        return;
    }
    if (section == "sim") {
        if (key == "dt") cfg.dt = num();
        else if (key == "integrator") {
            const std::string v = trim(value);
            if (v == "euler") cfg.integrator = IntegratorKind::Euler;
            else if (v == "rk4") cfg.integrator = IntegratorKind::Rk4;
            else fail("key 'sim.integrator': expected euler|rk4, got '" + v + "'",
                      line, column);
        } else if (key == "sgn_mode") cfg.sgn_mode = parse_sgn(value, full, line, column);
        else if (key == "sgn_mode_position")
            cfg.sgn_mode_position = parse_sgn_opt(value, full, line, column);
        else if (key == "sgn_mode_current")
            cfg.sgn_mode_current = parse_sgn_opt(value, full, line, column);
        else if (key == "sgn_mode_inversion")
            cfg.sgn_mode_inversion = parse_sgn_opt(value, full, line, column);
        else if (key == "epsilon_grad") cfg.epsilon_grad = num();
        else if (key == "singularity_policy") {
            const std::string v = trim(value);
            if (v == "abort") cfg.singularity_policy = SingularityPolicy::Abort;
            else if (v == "hold") cfg.singularity_policy = SingularityPolicy::Hold;
            else fail("key 'sim.singularity_policy': expected abort|hold, got '" + v + "'",
                      line, column);
        } else if (key == "u_max") cfg.u_max = num();
        else if (key == "convergence_radius") cfg.convergence_radius = num();
        else if (key == "tol_v_fraction") cfg.tol_v_fraction = num();
        else fail("unknown key '" + full + "'", line, column);
        return;
    }
    fail("unknown section '" + section + "'", line, column);
}

namespace {

void apply_override(ScenarioConfig& cfg, const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) {
        fail("override '" + spec + "' is not of the form section.key=value", 0, 0);
    }
    const std::string path = trim(spec.substr(0, eq));
    const std::string value = spec.substr(eq + 1);
    const auto dot = path.rfind('.');
    if (dot == std::string::npos) {
        fail("override '" + spec + "': key must be qualified as section.key", 0, 0);
    }
    assign_config_key(cfg, path.substr(0, dot), path.substr(dot + 1), value);
}

}  // namespace

ScenarioConfig parse_config(const std::string& text,
                            const std::vector<std::string>& overrides) {
    ScenarioConfig cfg;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        const int column = static_cast<int>(raw.find_first_not_of(" \t")) + 1;
        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3) {
                fail("malformed section header '" + line + "'", line_no, column);
            }
            section = trim(line.substr(1, line.size() - 2));
            if (section != "plant" && section != "gains" && section != "scenario" &&
                section != "scenario.pulse" && section != "sim") {
                fail("unknown section '" + section + "'", line_no, column);
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            fail("expected 'key = value', got '" + line + "'", line_no, column);
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = line.substr(eq + 1);
        if (key.empty()) fail("missing key before '='", line_no, column);
        if (section.empty()) {
            fail("key '" + key + "' appears before any [section] header", line_no, column);
        }
        assign_config_key(cfg, section, key, value, line_no, column);
    }
    for (const std::string& o : overrides) apply_override(cfg, o);
    cfg.resolve();
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what(), 0, 0);
    }
    return cfg;
}

ScenarioConfig parse_config(const std::string& text) { return parse_config(text, {}); }

ScenarioConfig parse_config_file(const std::string& path,
                                 const std::vector<std::string>& overrides) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'", 0, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), overrides);
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string render_config(const ScenarioConfig& cfg) {
    std::ostringstream out;
    out << "[plant]\n";
    out << "m = " << fmt(cfg.plant.m) << "\n";
    out << "k_z = " << fmt(cfg.plant.k_z) << "\n";
    out << "mu0 = " << fmt(cfg.plant.mu0) << "\n";
    out << "n = " << fmt(cfg.plant.n) << "\n";
    out << "A = " << fmt(cfg.plant.A) << "\n";
    out << "s0 = " << fmt(cfg.plant.s0) << "\n";
    out << "i0 = " << fmt(cfg.plant.i0) << "\n";
    out << "R = " << fmt(cfg.plant.R) << "\n";
    out << "g = " << fmt(cfg.plant.g) << "\n";
    out << "\n[gains]\n";
    out << "c = " << fmt(cfg.gains.c) << "\n";
    out << "k = " << fmt(cfg.gains.k) << "\n";
    out << "gamma = " << fmt(cfg.gains.gamma) << "\n";
    out << "k_i = " << fmt(cfg.gains.k_i) << "\n";
    out << "p = " << fmt(cfg.gains.p) << "\n";
    out << "Q_z = " << fmt(cfg.gains.Q_z) << "\n";
    out << "Q_i = " << fmt(cfg.gains.Q_i) << "\n";
    out << "\n[scenario]\n";
    out << "kind = " << to_string(cfg.kind) << "\n";
    out << "A_r = " << fmt(cfg.A_r) << "\n";
    out << "f_r = " << fmt(cfg.f_r) << "\n";
    out << "duration = " << fmt(cfg.duration) << "\n";
    out << "seed = " << cfg.seed << "\n";
    out << "noise_value = " << fmt(cfg.noise_value) << "\n";
    out << "noise_interpretation = " << to_string(cfg.noise_interpretation) << "\n";
    out << "z0 = " << fmt(cfg.initial.z0) << "\n";
    out << "z_dot0 = " << fmt(cfg.initial.z_dot0) << "\n";
    if (cfg.initial.i0.has_value()) out << "i0 = " << fmt(*cfg.initial.i0) << "\n";
    else out << "i0 = warm\n";
    if (cfg.initial.i_ref_warm_start) out << "i_ref0 = warm\n";
    else out << "i_ref0 = " << fmt(cfg.initial.i_ref0) << "\n";
    out << "\n[scenario.pulse]\n";
    out << "t_on = " << fmt(cfg.pulse.t_on) << "\n";
    out << "t_off = " << fmt(cfg.pulse.t_off) << "\n";
    out << "amplitude = " << fmt(cfg.pulse.amplitude) << "\n";
    out << "\n[sim]\n";
    out << "dt = " << fmt(cfg.dt) << "\n";
    out << "integrator = " << to_string(cfg.integrator) << "\n";
    out << "sgn_mode = " << to_string(cfg.sgn_mode) << "\n";
    out << "sgn_mode_position = "
        << (cfg.sgn_mode_position ? to_string(*cfg.sgn_mode_position) : "inherit") << "\n";
    out << "sgn_mode_current = "
        << (cfg.sgn_mode_current ? to_string(*cfg.sgn_mode_current) : "inherit") << "\n";
    out << "sgn_mode_inversion = "
        << (cfg.sgn_mode_inversion ? to_string(*cfg.sgn_mode_inversion) : "inherit") << "\n";
    out << "epsilon_grad = " << fmt(cfg.epsilon_grad) << "\n";
    out << "singularity_policy = " << to_string(cfg.singularity_policy) << "\n";
    out << "u_max = " << fmt(cfg.u_max) << "\n";
    out << "convergence_radius = " << fmt(cfg.convergence_radius) << "\n";
    out << "tol_v_fraction = " << fmt(cfg.tol_v_fraction) << "\n";
    return out.str();
}

}  // namespace ambsim
