#pragma once

// Adaptive inversion of the force map: instead of solving v(z, i) = v* for i
// algebraically each step (two roots, noise-brittle), an estimator state
// i_ref slews so that the input error vtilde = v* - v(z, i_ref) contracts:
//
//   di_ref/dt = gamma * S(vtilde) / (dv/di)(z, i_ref).
//
// The law is usable only while the gradient dv/di stays away from zero;
// its zero set is the curve z^2 + (2 s0 / i0) i z + s0^2 = 0, on which
// current changes cannot move the estimated force. Callers must guard
// every division with check_singularity (adaptive_rate does so itself).

#include <cstddef>
#include <span>
#include <stdexcept>

#include "ambsim/control.hpp"
#include "ambsim/plant.hpp"

namespace ambsim {

/// Raised when the inversion gradient magnitude falls to epsilon_grad or
/// below, i.e. the estimator has lost authority over the input error.
class SingularGradientError : public std::runtime_error {
public:
    SingularGradientError(double margin, double threshold);
    double margin() const { return margin_; }
    double threshold() const { return threshold_; }

private:
    double margin_;
    double threshold_;
};

/// Result of a gradient-margin probe.
struct SingularityCheck {
    bool ok = false;
    double margin = 0.0;  ///< |dv/di| at the probed point
};

/// Default gradient floor: 0.1% of the gradient at centered gap and zero
/// deviation current, 4 i0 / s0^2.
double default_epsilon_grad(const PlantParams& p);

/// Diagnostic probe: ok iff |dv/di(z, i_ref)| > epsilon_grad.
/// Pre: |z| < s0. Never throws on a singular point.
SingularityCheck check_singularity(const PlantParams& p, double z, double i_ref,
                                   double epsilon_grad);

/// Estimator slew rate gamma * S(v* - v(z, i_ref)) / dv_di(z, i_ref).
/// Throws SingularGradientError if |dv_di| <= epsilon_grad.
/// Pre: |z| < s0.
double adaptive_rate(const PlantParams& p, double z, double i_ref, double v_star,
                     double gamma, SgnMode mode, double steepness,
                     double epsilon_grad);

/// Post-hoc bound estimate for the drift term d = d(v*)/dt - (dv/dz) z_dot
/// that the adaptation gain must dominate. d(v*)/dt is a backward difference
/// of the logged v* samples; the gradient is evaluated at the logged state.
/// All spans must have equal length >= 2; dt > 0.
/// Returns max_t |d(t)|.
double delta1_estimate(const PlantParams& p, std::span<const double> v_star,
                       std::span<const double> z, std::span<const double> z_dot,
                       std::span<const double> i_ref, double dt);

}  // namespace ambsim
