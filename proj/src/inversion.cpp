#include "ambsim/inversion.hpp"

#include <cmath>
#include <string>

namespace ambsim {

SingularGradientError::SingularGradientError(double margin, double threshold)
    : std::runtime_error("inversion gradient magnitude " + std::to_string(margin) +
                         " at or below floor " + std::to_string(threshold)),
      margin_(margin),
      threshold_(threshold) {}

double default_epsilon_grad(const PlantParams& p) {
    return 1e-3 * 4.0 * p.i0 / (p.s0 * p.s0);
}

SingularityCheck check_singularity(const PlantParams& p, double z, double i_ref,
                                   double epsilon_grad) {
    const double margin = std::abs(dv_di(p, z, i_ref));
    return SingularityCheck{margin > epsilon_grad, margin};
}

double adaptive_rate(const PlantParams& p, double z, double i_ref, double v_star,
                     double gamma, SgnMode mode, double steepness,
                     double epsilon_grad) {
    const double grad = dv_di(p, z, i_ref);
    if (!(std::abs(grad) > epsilon_grad)) {
        throw SingularGradientError(std::abs(grad), epsilon_grad);
    }
    const double vtilde = v_star - virtual_input(p, z, i_ref);
    return gamma * switching(vtilde, mode, steepness) / grad;
}

double delta1_estimate(const PlantParams& p, std::span<const double> v_star,
                       std::span<const double> z, std::span<const double> z_dot,
                       std::span<const double> i_ref, double dt) {
    const std::size_t n = v_star.size();
    if (n < 2) {
        throw std::invalid_argument("delta1_estimate needs at least 2 samples");
    }
    if (z.size() != n || z_dot.size() != n || i_ref.size() != n) {
        throw std::invalid_argument("delta1_estimate: column lengths differ");
    }
    if (!(dt > 0.0)) {
        throw std::invalid_argument("delta1_estimate: dt must be positive");
    }
    double worst = 0.0;
    for (std::size_t t = 1; t < n; ++t) {
        const double v_star_rate = (v_star[t] - v_star[t - 1]) / dt;
        const double drift = v_star_rate - dv_dz(p, z[t], i_ref[t]) * z_dot[t];
        worst = std::max(worst, std::abs(drift));
    }
    return worst;
}

}  // namespace ambsim
