#include "ambsim/scenario.hpp"

#include <numbers>
#include <stdexcept>

#include "ambsim/inversion.hpp"

namespace ambsim {

void ScenarioConfig::resolve() {
    if (std::isnan(duration)) {
        duration = kind == ScenarioKind::Tracking ? 2.5 : 2.0;
    }
    if (std::isnan(pulse.t_on)) pulse.t_on = 0.4 * duration;
    if (std::isnan(pulse.t_off)) pulse.t_off = 0.6 * duration;
    if (std::isnan(pulse.amplitude)) pulse.amplitude = gains.Q_z;
    if (std::isnan(epsilon_grad)) epsilon_grad = default_epsilon_grad(plant);
}

void ScenarioConfig::validate() const {
    plant.validate();
    gains.validate();
    auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };

    if (std::isnan(duration) || std::isnan(pulse.t_on) || std::isnan(pulse.t_off) ||
        std::isnan(pulse.amplitude) || std::isnan(epsilon_grad)) {
        fail("config not resolved (derived defaults missing)");
    }
    if (!(dt > 0.0)) fail("dt must be positive");
    if (!(duration >= dt)) fail("duration must be at least one step");
    if (!(pulse.t_on >= 0.0 && pulse.t_on < pulse.t_off && pulse.t_off <= duration)) {
        fail("pulse window must satisfy 0 <= t_on < t_off <= duration");
    }
    if (std::abs(pulse.amplitude) > gains.Q_z) {
        fail("pulse amplitude exceeds the disturbance bound Q_z");
    }
    if (!(noise_value >= 0.0)) fail("noise figure must be >= 0");
    if (kind == ScenarioKind::Tracking && !(A_r < plant.s0)) {
        fail("reference amplitude A_r must stay inside the air gap");
    }
    if (kind == ScenarioKind::Tracking && !(A_r >= 0.0 && f_r > 0.0)) {
        fail("tracking scenario needs A_r >= 0 and f_r > 0");
    }
    if (!(std::abs(initial.z0) < plant.s0)) fail("initial z0 must satisfy |z0| < s0");
    if (!(epsilon_grad > 0.0)) fail("epsilon_grad must be positive");
    if (!(u_max >= 0.0)) fail("u_max must be >= 0 (0 disables saturation)");
    if (!(convergence_radius > 0.0)) fail("convergence_radius must be positive");
    if (!(tol_v_fraction > 0.0)) fail("tol_v_fraction must be positive");
}

double ScenarioConfig::noise_std() const {
    if (noise_interpretation == NoiseInterpretation::Variance) {
        return std::sqrt(noise_value);
    }
    return noise_value;
}

Reference reference_at(const ScenarioConfig& cfg, double t) {
    if (cfg.kind == ScenarioKind::Regulation) return Reference{0.0, 0.0, 0.0};
    const double omega = 2.0 * std::numbers::pi * cfg.f_r;
    return Reference{cfg.A_r * std::sin(omega * t),
                     cfg.A_r * omega * std::cos(omega * t),
                     -cfg.A_r * omega * omega * std::sin(omega * t)};
}

Disturbances disturbance_at(const ScenarioConfig& cfg, double t) {
    Disturbances d;
    if (t >= cfg.pulse.t_on && t < cfg.pulse.t_off) d.q_z = cfg.pulse.amplitude;
    return d;
}

const char* to_string(ScenarioKind k) {
    return k == ScenarioKind::Tracking ? "tracking" : "regulation";
}
const char* to_string(NoiseInterpretation n) {
    return n == NoiseInterpretation::Variance ? "variance" : "std";
}
const char* to_string(SingularityPolicy s) {
    return s == SingularityPolicy::Abort ? "abort" : "hold";
}
const char* to_string(SgnMode m) { return m == SgnMode::Ideal ? "ideal" : "approx"; }
const char* to_string(IntegratorKind k) {
    return k == IntegratorKind::Euler ? "euler" : "rk4";
}

}  // namespace ambsim
