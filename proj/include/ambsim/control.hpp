#pragma once

// Sliding-mode control laws for the two cascade loops. The position loop
// commands a virtual force v* that drives the sliding variable
// sigma = e_z_dot + c e_z to zero; the current loop computes the coil
// voltage that makes the current error e = i - i_ref contract at rate k_i.
// Both laws can switch with the ideal signum or with the smooth surrogate
// (2/pi) atan(p x) used to suppress chattering.

#include "ambsim/plant.hpp"

namespace ambsim {

/// Switching-function flavor used by the control and inversion laws.
enum class SgnMode {
    Ideal,   ///< discontinuous signum, sgn(0) = 0
    Approx,  ///< (2/pi) atan(p x)
};

/// Controller gains and the disturbance bounds they must dominate.
struct Gains {
    double c = 17.0;     ///< sliding-surface decay rate [1/s]
    double k = 25.0;     ///< position switching gain, must exceed Q_z
    double gamma = 1000.0;  ///< inversion adaptation gain
    double k_i = 152.0;  ///< current switching gain, must exceed Q_i
    double p = 25.0;     ///< signum approximation steepness
    double Q_z = 1.0;    ///< force disturbance bound
    double Q_i = 0.0;    ///< current disturbance bound

    /// Throws std::invalid_argument on a violated gain condition
    /// (c > 0, k > Q_z >= 0, k_i > Q_i >= 0, gamma > 0, p >= 1).
    void validate() const;
};

/// Position reference with the two derivatives the control law consumes.
struct Reference {
    double r = 0.0;       ///< [m]
    double r_dot = 0.0;   ///< [m/s]
    double r_ddot = 0.0;  ///< [m/s^2]
};

/// Smooth signum surrogate (2/pi) atan(p x), odd, ranges in (-1, 1).
double sgn_approx(double x, double p);

/// Switching function in the requested mode.
double switching(double x, SgnMode mode, double p);

/// sigma = (z_dot - r_dot) + c (z - r).
double sliding_variable(const PlantState& state, const Reference& ref, double c);

/// Virtual-force command
///   v* = (4m/kappa) [ -(2 k_z/m) z - c (z_dot - r_dot) + r_ddot + g - k S(sigma) ].
/// Cancels the passive stiffness and gravity, then pushes sigma towards zero.
/// Pre: |state.z| < s0.
double position_control(const PlantParams& params, const PlantState& state,
                        const Reference& ref, const Gains& gains, SgnMode mode);

/// Coil voltage
///   u = (kappa / 2(s0+z)) [ -(2 z_dot/(s0+z)) i + di_ref_dt - k_i S(i - i_ref) ] + R i.
/// Substituted into the current dynamics this cancels every model term,
/// leaving e_dot = -k_i S(e) + q_i. Pre: |state.z| < s0.
double current_control(const PlantParams& params, const PlantState& state,
                       double i_ref, double di_ref_dt, const Gains& gains,
                       SgnMode mode);

}  // namespace ambsim
