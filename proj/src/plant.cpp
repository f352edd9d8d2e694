#include "ambsim/plant.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ambsim {

namespace {

void require_gap(const PlantParams& p, double z) {
    if (!(std::abs(z) < p.s0)) {
        throw std::domain_error("rotor displacement |z| = " +
                                std::to_string(std::abs(z)) +
                                " outside the air gap s0 = " +
                                std::to_string(p.s0));
    }
}

}  // namespace

void PlantParams::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument(std::string("plant parameter ") + name +
                                        " must be positive and finite");
        }
    };
    positive(m, "m");
    positive(mu0, "mu0");
    positive(n, "n");
    positive(A, "A");
    positive(s0, "s0");
    positive(i0, "i0");
    positive(R, "R");
    positive(g, "g");
    if (!std::isfinite(k_z)) {
        throw std::invalid_argument("plant parameter k_z must be finite");
    }
}

double virtual_input(const PlantParams& p, double z, double i) {
    require_gap(p, z);
    const double up = (p.i0 + i) / (p.s0 - z);
    const double down = (p.i0 - i) / (p.s0 + z);
    return up * up - down * down;
}

double dv_di(const PlantParams& p, double z, double i) {
    require_gap(p, z);
    const double gu = p.s0 - z;
    const double gd = p.s0 + z;
    return 2.0 * (p.i0 + i) / (gu * gu) + 2.0 * (p.i0 - i) / (gd * gd);
}

double dv_dz(const PlantParams& p, double z, double i) {
    require_gap(p, z);
    const double iu = p.i0 + i;
    const double id = p.i0 - i;
    const double gu = p.s0 - z;
    const double gd = p.s0 + z;
    return 2.0 * iu * iu / (gu * gu * gu) + 2.0 * id * id / (gd * gd * gd);
}

PlantDeriv plant_derivative(const PlantParams& p, const PlantState& state,
                            double u, const Disturbances& dist) {
    require_gap(p, state.z);
    const double kappa = p.kappa();
    PlantDeriv d;
    d.z_dot = state.z_dot;
    d.z_ddot = (2.0 * p.k_z / p.m) * state.z +
               kappa / (4.0 * p.m) * virtual_input(p, state.z, state.i) -
               p.g + dist.q_z;
    d.di_dt = (2.0 * state.z_dot / (p.s0 + state.z)) * state.i +
              (2.0 * (p.s0 + state.z) / kappa) * (u - p.R * state.i) +
              dist.q_i;
    return d;
}

double hover_current(const PlantParams& p) {
    return p.m * p.g * p.s0 * p.s0 / (p.i0 * p.kappa());
}

}  // namespace ambsim
