#pragma once

// Fixed-step integrators over small state arrays. The derivative callable
// receives the state and returns an array of the same extent; control
// inputs are expected to be captured by the callable and held constant
// across the step (zero-order hold).

#include <array>
#include <cstddef>

namespace ambsim {

enum class IntegratorKind {
    Euler,
    Rk4,
};

template <std::size_t N, class F>
std::array<double, N> integrate_euler(F&& deriv, const std::array<double, N>& y,
                                      double dt) {
    const auto d = deriv(y);
    std::array<double, N> out{};
    for (std::size_t j = 0; j < N; ++j) out[j] = y[j] + dt * d[j];
    return out;
}

template <std::size_t N, class F>
std::array<double, N> integrate_rk4(F&& deriv, const std::array<double, N>& y,
                                    double dt) {
    const auto k1 = deriv(y);
    std::array<double, N> tmp{};
    for (std::size_t j = 0; j < N; ++j) tmp[j] = y[j] + 0.5 * dt * k1[j];
    const auto k2 = deriv(tmp);
    for (std::size_t j = 0; j < N; ++j) tmp[j] = y[j] + 0.5 * dt * k2[j];
    const auto k3 = deriv(tmp);
    for (std::size_t j = 0; j < N; ++j) tmp[j] = y[j] + dt * k3[j];
    const auto k4 = deriv(tmp);
    std::array<double, N> out{};
    for (std::size_t j = 0; j < N; ++j) {
        out[j] = y[j] + dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    }
    return out;
}

template <std::size_t N, class F>
std::array<double, N> integrate_step(IntegratorKind kind, F&& deriv,
                                     const std::array<double, N>& y, double dt) {
    if (kind == IntegratorKind::Euler) return integrate_euler(deriv, y, dt);
    return integrate_rk4(deriv, y, dt);
}

}  // namespace ambsim
