#pragma once

// Axial dynamics of a vertical-axis rotor suspended between two opposed
// electromagnets. The two coil currents are driven differentially around a
// bias: i_up = i0 + i, i_down = i0 - i, so the single deviation current i is
// the electrical control channel. States are the axial displacement z
// (positive towards the upper magnet), its velocity, and i.
//
//   z_ddot = (2 k_z / m) z + (kappa / 4m) v(z, i) - g + q_z
//   di/dt  = (2 z_dot / (s0 + z)) i + (2 (s0 + z) / kappa)(u - R i) + q_i
//
// with kappa = mu0 n^2 A and v(z, i) the scaled net magnetic force
//
//   v(z, i) = ((i0 + i) / (s0 - z))^2 - ((i0 - i) / (s0 + z))^2 .
//
// v is treated as the virtual input of the mechanical subsystem; the
// control cascade inverts it for a current reference. All expressions are
// singular at z = +-s0 (rotor touching a magnet), so every operation below
// requires |z| < s0 and throws std::domain_error otherwise.

namespace ambsim {

/// Physical constants of the bearing rig (defaults: reference hardware).
struct PlantParams {
    double m = 0.588;      ///< rotor + axle mass [kg]
    double k_z = -754.0;   ///< axial stiffness [N/m]
    double mu0 = 1.25e-6;  ///< vacuum permeability [N/A^2]
    double n = 1480.0;     ///< windings per coil
    double A = 0.121;      ///< coil cross-sectional area [m^2]
    double s0 = 5e-3;      ///< nominal air gap [m]
    double i0 = 0.25;      ///< bias current [A]
    double R = 41.44;      ///< coil resistance [Ohm]
    double g = 9.81;       ///< gravitational acceleration [m/s^2]

    /// Electromagnet force constant mu0 * n^2 * A [N/A^2 * m^2].
    double kappa() const { return mu0 * n * n * A; }

    /// Throws std::invalid_argument naming the offending field.
    /// k_z is the one constant allowed to be negative.
    void validate() const;
};

/// Continuous plant state.
struct PlantState {
    double z = 0.0;      ///< axial displacement [m], valid range (-s0, s0)
    double z_dot = 0.0;  ///< axial velocity [m/s]
    double i = 0.0;      ///< deviation current [A]
};

/// Time derivative of PlantState.
struct PlantDeriv {
    double z_dot = 0.0;
    double z_ddot = 0.0;
    double di_dt = 0.0;
};

/// Lumped bounded perturbations entering the force and current channels.
struct Disturbances {
    double q_z = 0.0;  ///< force-channel disturbance, acceleration units [m/s^2]
    double q_i = 0.0;  ///< current-channel disturbance [A/s]
};

/// Scaled net magnetic force v(z, i). Pre: |z| < s0.
double virtual_input(const PlantParams& p, double z, double i);

/// Partial derivative of v with respect to the deviation current,
/// 2(i0+i)/(s0-z)^2 + 2(i0-i)/(s0+z)^2. Vanishes exactly on the curve
/// z^2 + (2 s0 / i0) i z + s0^2 = 0, where the current loses authority
/// over the force. Pre: |z| < s0.
double dv_di(const PlantParams& p, double z, double i);

/// Partial derivative of v with respect to displacement,
/// 2(i0+i)^2/(s0-z)^3 + 2(i0-i)^2/(s0+z)^3 (always positive: the bias flux
/// acts as a negative stiffness). Pre: |z| < s0.
double dv_dz(const PlantParams& p, double z, double i);

/// Open-loop state derivative under voltage u and disturbances.
/// Pre: |state.z| < s0.
PlantDeriv plant_derivative(const PlantParams& p, const PlantState& state,
                            double u, const Disturbances& dist);

/// Deviation current that balances gravity at z = 0 with zero velocity:
/// i = m g s0^2 / (i0 kappa).
double hover_current(const PlantParams& p);

}  // namespace ambsim
