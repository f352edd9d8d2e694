#pragma once

// Scenario description for a closed-loop run: plant constants, gains,
// reference shape, disturbance pulse, sensor noise, initial conditions and
// integration settings. A config is built with partial information (NaN
// marks "derive a default"), then resolve() materializes every derived
// value and validate() enforces the invariants. Only a resolved, valid
// config may be simulated.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "ambsim/control.hpp"
#include "ambsim/plant.hpp"
#include "ambsim/integrate.hpp"

namespace ambsim {

enum class ScenarioKind {
    Regulation,  ///< hold z at the origin
    Tracking,    ///< follow A_r sin(2 pi f_r t)
};

/// How the configured noise figure is read.
enum class NoiseInterpretation {
    Variance,  ///< value is a variance [m^2]; std = sqrt(value)
    StdDev,    ///< value is a standard deviation [m]
};

/// Reaction to a vanishing inversion gradient during a run.
enum class SingularityPolicy {
    Abort,  ///< terminate the run with SingularGradient status
    Hold,   ///< freeze i_ref for the step, log the event, continue
};

/// Rectangular force-channel disturbance, active on [t_on, t_off).
struct PulseConfig {
    double t_on = NAN;      ///< default 40% of duration
    double t_off = NAN;     ///< default 60% of duration
    double amplitude = NAN; ///< default gains.Q_z; 0 disables
};

/// State of plant and estimator at t = 0. The estimator start value can be
/// given explicitly or warm-started so that v(z0, i_ref0) equals the initial
/// force command (i_ref_warm_start = true, the default): the adaptation gain
/// bounds the estimator slew, so a cold start with a large initial input
/// error drives the rotor into the stator within milliseconds. The plant
/// current defaults to i_ref0 for the same reason (the lift deficit while
/// the current loop closes a large gap kicks the rotor beyond the
/// estimator's trackable velocity); set i0 to pin it explicitly.
struct InitialConditions {
    double z0 = 0.0;
    double z_dot0 = 0.0;
    std::optional<double> i0;  ///< nullopt: start at the current reference
    bool i_ref_warm_start = true;
    double i_ref0 = 0.0;  ///< used when i_ref_warm_start is false
};

struct ScenarioConfig {
    PlantParams plant;
    Gains gains;

    ScenarioKind kind = ScenarioKind::Regulation;
    double A_r = 0.0025;  ///< reference amplitude [m] (tracking)
    double f_r = 2.0;     ///< reference frequency [Hz] (tracking)

    double duration = NAN;  ///< default 2 s regulation, 2.5 s tracking
    double dt = 1e-5;
    std::uint64_t seed = 1;

    double noise_value = 1e-7;  ///< position sensor noise figure
    NoiseInterpretation noise_interpretation = NoiseInterpretation::Variance;

    PulseConfig pulse;
    InitialConditions initial;

    SgnMode sgn_mode = SgnMode::Approx;  ///< default for all three loops
    std::optional<SgnMode> sgn_mode_position;
    std::optional<SgnMode> sgn_mode_current;
    std::optional<SgnMode> sgn_mode_inversion;

    IntegratorKind integrator = IntegratorKind::Rk4;

    double epsilon_grad = NAN;  ///< default 1e-3 * 4 i0 / s0^2
    SingularityPolicy singularity_policy = SingularityPolicy::Abort;

    double u_max = 0.0;  ///< voltage saturation, 0 disables

    double convergence_radius = 2e-3;  ///< sigma_ss_radius bound for the converged flag
    double tol_v_fraction = 0.01;      ///< vtilde settling band, fraction of max |v*|

    /// Fill every NaN field with its derived default. Idempotent.
    void resolve();

    /// Throws std::invalid_argument naming the first violated invariant.
    /// Requires a resolved config (no NaNs left).
    void validate() const;

    double noise_std() const;
    SgnMode position_sgn() const { return sgn_mode_position.value_or(sgn_mode); }
    SgnMode current_sgn() const { return sgn_mode_current.value_or(sgn_mode); }
    SgnMode inversion_sgn() const { return sgn_mode_inversion.value_or(sgn_mode); }
};

/// Reference signal at time t: the origin for regulation, the sinusoid and
/// its two derivatives for tracking.
Reference reference_at(const ScenarioConfig& cfg, double t);

/// Disturbance injected at time t (the configured pulse; q_i is zero unless
/// a scenario extends it).
Disturbances disturbance_at(const ScenarioConfig& cfg, double t);

const char* to_string(ScenarioKind k);
const char* to_string(NoiseInterpretation n);
const char* to_string(SingularityPolicy s);
const char* to_string(SgnMode m);
const char* to_string(IntegratorKind k);

}  // namespace ambsim
