#include "ambsim/sim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ambsim/integrate.hpp"
#include "ambsim/inversion.hpp"

namespace ambsim {

const char* to_string(RunStatus s) {
    switch (s) {
        case RunStatus::Completed: return "completed";
        case RunStatus::RotorContact: return "rotor_contact";
        case RunStatus::SingularGradient: return "singular_gradient";
        case RunStatus::NumericalBlowup: return "numerical_blowup";
    }
    return "unknown";
}

int exit_code(RunStatus s) {
    switch (s) {
        case RunStatus::Completed: return 0;
        case RunStatus::RotorContact: return 3;
        case RunStatus::SingularGradient: return 4;
        case RunStatus::NumericalBlowup: return 5;
    }
    return 1;
}

double invert_force(const PlantParams& p, double z, double v_target) {
    if (!(std::abs(z) < p.s0)) {
        throw std::domain_error("invert_force: |z| >= s0");
    }
    const double gu = p.s0 - z;
    const double gd = p.s0 + z;
    const double a = 1.0 / (gu * gu);
    const double b = 1.0 / (gd * gd);
    const double lead = a - b;                       // quadratic coefficient
    const double linear = 2.0 * p.i0 * (a + b);      // always positive
    const double constant = lead * p.i0 * p.i0 - v_target;
    if (lead == 0.0) {
        return -constant / linear;
    }
    const double disc = 4.0 * (p.i0 * p.i0 * a * b) + lead * v_target;
    if (disc < 0.0) {
        throw std::domain_error("invert_force: force target unreachable at this displacement");
    }
    // cancellation-free form: q and constant/q are the two roots of
    // lead*i^2 + linear*i + constant, with linear > 0
    const double q = -0.5 * (linear + 2.0 * std::sqrt(disc));
    for (double candidate : {constant / q, q / lead}) {
        if (dv_di(p, z, candidate) > 0.0) return candidate;
    }
    throw std::domain_error("invert_force: no root on the positive-gradient branch");
}

Simulator::Simulator(const ScenarioConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {
    cfg_.validate();
    total_steps_ = static_cast<std::uint64_t>(std::llround(cfg_.duration / cfg_.dt));
    if (total_steps_ == 0) total_steps_ = 1;
    y_[0] = cfg_.initial.z0;
    y_[1] = cfg_.initial.z_dot0;
    if (cfg_.initial.i_ref_warm_start) {
        const Reference ref0 = reference_at(cfg_, 0.0);
        const PlantState s0{y_[0], y_[1], 0.0};  // v* does not involve i
        const double v0 = position_control(cfg_.plant, s0, ref0, cfg_.gains,
                                           cfg_.position_sgn());
        y_[3] = invert_force(cfg_.plant, y_[0], v0);
    } else {
        y_[3] = cfg_.initial.i_ref0;
    }
    y_[2] = cfg_.initial.i0.value_or(y_[3]);
    events_.reserve(8);
}

double Simulator::gaussian() {
    // Box-Muller on two fresh engine draws; the standard library's
    // normal_distribution is implementation-defined, this is not.
    const double scale = 1.0 / 18446744073709551616.0;  // 2^-64
    const double u1 = (static_cast<double>(rng_()) + 1.0) * scale;  // (0, 1]
    const double u2 = static_cast<double>(rng_()) * scale;          // [0, 1)
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

void Simulator::terminate(RunStatus status, const char* event, double value) {
    status_ = status;
    stop_pending_ = true;
    events_.push_back(RunEvent{time(), event, value});
}

std::optional<SimRecord> Simulator::next() {
    if (finished_) return std::nullopt;
    if (stop_pending_) {
        finished_ = true;
        return std::nullopt;
    }
    if (step_index_ >= total_steps_) {
        status_ = RunStatus::Completed;
        finished_ = true;
        return std::nullopt;
    }

    const double t = time();
    const PlantParams& plant = cfg_.plant;
    const Gains& gains = cfg_.gains;

    // 1. measurement: noise corrupts the position channel only
    const double noise_std = cfg_.noise_std();
    const double z_measured = y_[0] + (noise_std > 0.0 ? noise_std * gaussian() : 0.0);
    // the controller expressions are singular at |z| = s0; a noisy reading
    // outside the gap is clipped just inside before being consumed
    const double z_ctrl = std::clamp(z_measured, -plant.s0 * (1.0 - 1e-9),
                                     plant.s0 * (1.0 - 1e-9));
    const PlantState measured{z_ctrl, y_[1], y_[2]};
    const PlantState truth{y_[0], y_[1], y_[2]};

    // 2.-3. reference, sliding variable and force command from measurements
    const Reference ref = reference_at(cfg_, t);
    const double v_star =
        position_control(plant, measured, ref, gains, cfg_.position_sgn());

    // 4. estimator slew and input error
    const double i_ref = y_[3];
    const double v_tilde = v_star - virtual_input(plant, z_ctrl, i_ref);
    double di_ref_dt = 0.0;
    const SingularityCheck guard =
        check_singularity(plant, z_ctrl, i_ref, cfg_.epsilon_grad);
    if (!guard.ok) {
        ++singularity_events_;
        events_.push_back(RunEvent{t, "singular_gradient", guard.margin});
        if (cfg_.singularity_policy == SingularityPolicy::Abort) {
            status_ = RunStatus::SingularGradient;
            finished_ = true;
            return std::nullopt;
        }
        // hold policy: freeze the estimator for this step
    } else {
        di_ref_dt = gains.gamma *
                    switching(v_tilde, cfg_.inversion_sgn(), gains.p) /
                    dv_di(plant, z_ctrl, i_ref);
    }

    // 5. coil voltage
    double u = current_control(plant, measured, i_ref, di_ref_dt, gains,
                               cfg_.current_sgn());
    if (cfg_.u_max > 0.0) u = std::clamp(u, -cfg_.u_max, cfg_.u_max);

    const Disturbances dist = disturbance_at(cfg_, t);

    SimRecord rec;
    rec.t = t;
    rec.z = y_[0];
    rec.z_dot = y_[1];
    rec.i = y_[2];
    rec.i_ref = i_ref;
    rec.u = u;
    rec.sigma = sliding_variable(truth, ref, gains.c);
    rec.v_star = v_star;
    rec.v_tilde = v_tilde;
    rec.q_z = dist.q_z;
    rec.q_i = dist.q_i;
    rec.r = ref.r;
    rec.z_measured = z_measured;

    // 6. integrate the held-input system one step
    auto deriv = [&](const std::array<double, 4>& y) {
        const PlantState s{y[0], y[1], y[2]};
        const PlantDeriv d = plant_derivative(plant, s, u, dist);
        return std::array<double, 4>{d.z_dot, d.z_ddot, d.di_dt, di_ref_dt};
    };
    bool contact = false;
    try {
        y_ = integrate_step(cfg_.integrator, deriv, y_, cfg_.dt);
    } catch (const std::domain_error&) {
        // an integrator stage stepped outside the air gap
        contact = true;
    }
    ++step_index_;

    // terminal checks run on the advanced state; the record for this cycle
    // is still delivered, the next pull reports the stop
    if (contact || !(std::abs(y_[0]) < plant.s0)) {
        terminate(RunStatus::RotorContact, "rotor_contact", y_[0]);
    } else if (!std::isfinite(y_[0]) || !std::isfinite(y_[1]) ||
               !std::isfinite(y_[2]) || !std::isfinite(y_[3])) {
        terminate(RunStatus::NumericalBlowup, "numerical_blowup", y_[0]);
    }
    return rec;
}

RunResult run(const ScenarioConfig& cfg) {
    Simulator sim(cfg);
    RunResult result;
    result.records.reserve(static_cast<std::size_t>(cfg.duration / cfg.dt) + 1);
    while (auto rec = sim.next()) {
        result.records.push_back(*rec);
    }
    result.events = sim.events();
    result.metrics =
        compute_metrics(cfg, result.records, sim.status(), sim.singularity_events());
    return result;
}

namespace {

bool inside_pulse(const ScenarioConfig& cfg, double t) {
    return cfg.pulse.amplitude != 0.0 && t >= cfg.pulse.t_on && t < cfg.pulse.t_off;
}

}  // namespace

RunMetrics compute_metrics(const ScenarioConfig& cfg,
                           const std::vector<SimRecord>& records,
                           RunStatus status, std::uint64_t singularity_events) {
    RunMetrics m;
    m.status = status;
    m.terminated_early = status != RunStatus::Completed;
    m.singularity_events = singularity_events;
    m.steps = records.size();
    if (records.empty()) return m;
    m.final_time = records.back().t;

    const double t_end = records.back().t;
    const double t_begin = records.front().t;
    const double span = t_end - t_begin;

    // settling window: the final 20% of the logged horizon for regulation,
    // the final two reference periods for tracking; pulse interval excluded
    double window_start = t_end - 0.2 * span;
    if (cfg.kind == ScenarioKind::Tracking && cfg.f_r > 0.0) {
        window_start = std::min(window_start, t_end - 2.0 / cfg.f_r);
        window_start = std::max(window_start, t_begin);
    }

    double sigma_radius = 0.0;
    double tracking_err = 0.0;
    double max_v_star = 0.0;
    bool have_window_sample = false;
    for (const SimRecord& rec : records) {
        max_v_star = std::max(max_v_star, std::abs(rec.v_star));
        if (rec.t < window_start || inside_pulse(cfg, rec.t)) continue;
        have_window_sample = true;
        sigma_radius = std::max(sigma_radius, std::abs(rec.sigma));
        tracking_err = std::max(tracking_err, std::abs(rec.z - rec.r));
    }
    if (have_window_sample) {
        m.sigma_ss_radius = sigma_radius;
        m.max_abs_tracking_error = tracking_err;
    }

    m.tol_v = cfg.tol_v_fraction * max_v_star;
    if (m.tol_v > 0.0) {
        // last violation decides the settling instant
        std::size_t last_violation = records.size();  // "none"
        for (std::size_t idx = records.size(); idx-- > 0;) {
            if (std::abs(records[idx].v_tilde) >= m.tol_v) {
                last_violation = idx;
                break;
            }
        }
        if (last_violation == records.size()) {
            m.vtilde_convergence_time = records.front().t;
        } else if (last_violation + 1 < records.size()) {
            m.vtilde_convergence_time = records[last_violation + 1].t;
        }  // else: still violating at the end -> NaN
    }

    if (records.size() >= 2) {
        std::vector<double> v_star_col, z_col, z_dot_col, i_ref_col;
        v_star_col.reserve(records.size());
        z_col.reserve(records.size());
        z_dot_col.reserve(records.size());
        i_ref_col.reserve(records.size());
        for (const SimRecord& rec : records) {
            v_star_col.push_back(rec.v_star);
            z_col.push_back(rec.z);
            z_dot_col.push_back(rec.z_dot);
            i_ref_col.push_back(rec.i_ref);
        }
        m.delta1_estimate = delta1_estimate(cfg.plant, v_star_col, z_col,
                                            z_dot_col, i_ref_col, cfg.dt);
        m.delta1_exceeds_gamma = m.delta1_estimate >= cfg.gains.gamma;
    }

    m.converged = !m.terminated_early && have_window_sample &&
                  m.sigma_ss_radius <= cfg.convergence_radius;
    return m;
}

}  // namespace ambsim
