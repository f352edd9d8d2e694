#include "ambsim/control.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ambsim {

void Gains::validate() const {
    if (!(c > 0.0)) throw std::invalid_argument("gain condition violated: c > 0 required");
    if (!(Q_z >= 0.0)) throw std::invalid_argument("disturbance bound Q_z must be >= 0");
    if (!(Q_i >= 0.0)) throw std::invalid_argument("disturbance bound Q_i must be >= 0");
    if (!(k > Q_z)) throw std::invalid_argument("gain condition violated: k > Q_z required");
    if (!(k_i > Q_i)) throw std::invalid_argument("gain condition violated: k_i > Q_i required");
    if (!(gamma > 0.0)) throw std::invalid_argument("gain condition violated: gamma > 0 required");
    if (!(p >= 1.0)) throw std::invalid_argument("signum steepness p must be >= 1");
}

double sgn_approx(double x, double p) {
    return 2.0 / std::numbers::pi * std::atan(p * x);
}

double switching(double x, SgnMode mode, double p) {
    if (mode == SgnMode::Approx) return sgn_approx(x, p);
    if (x > 0.0) return 1.0;
    if (x < 0.0) return -1.0;
    return 0.0;
}

double sliding_variable(const PlantState& state, const Reference& ref, double c) {
    return (state.z_dot - ref.r_dot) + c * (state.z - ref.r);
}

double position_control(const PlantParams& params, const PlantState& state,
                        const Reference& ref, const Gains& gains, SgnMode mode) {
    const double sigma = sliding_variable(state, ref, gains.c);
    // require_gap runs inside dv checks; here the only singular factor is the
    // 4m/kappa scale, so check the gap explicitly via virtual_input's guard.
    if (!(std::abs(state.z) < params.s0)) {
        throw std::domain_error("position_control: |z| >= s0");
    }
    const double bracket = -(2.0 * params.k_z / params.m) * state.z -
                           gains.c * (state.z_dot - ref.r_dot) + ref.r_ddot +
                           params.g - gains.k * switching(sigma, mode, gains.p);
    return 4.0 * params.m / params.kappa() * bracket;
}

double current_control(const PlantParams& params, const PlantState& state,
                       double i_ref, double di_ref_dt, const Gains& gains,
                       SgnMode mode) {
    if (!(std::abs(state.z) < params.s0)) {
        throw std::domain_error("current_control: |z| >= s0");
    }
    const double gap = params.s0 + state.z;
    const double e = state.i - i_ref;
    const double bracket = -(2.0 * state.z_dot / gap) * state.i + di_ref_dt -
                           gains.k_i * switching(e, mode, gains.p);
    return params.kappa() / (2.0 * gap) * bracket + params.R * state.i;
}

}  // namespace ambsim
