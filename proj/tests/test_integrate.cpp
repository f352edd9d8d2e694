#include <doctest.h>

#include <array>
#include <cmath>

#include "ambsim/integrate.hpp"

using namespace ambsim;

namespace {

std::array<double, 1> decay(const std::array<double, 1>& y) {
    return {-y[0]};
}

double global_error(double dt) {
    std::array<double, 1> y{1.0};
    const int steps = static_cast<int>(std::lround(1.0 / dt));
    for (int k = 0; k < steps; ++k) y = integrate_rk4(decay, y, dt);
    return std::abs(y[0] - std::exp(-1.0));
}

}  // namespace

TEST_CASE("zero derivative leaves the state untouched") {
    auto zero = [](const std::array<double, 3>& in) {
        (void)in;
        return std::array<double, 3>{0.0, 0.0, 0.0};
    };
    const std::array<double, 3> y{1.0, -2.0, 3.5};
    CHECK(integrate_euler(zero, y, 0.1) == y);
    CHECK(integrate_rk4(zero, y, 0.1) == y);
}

TEST_CASE("one fourth-order step of exponential decay") {
    std::array<double, 1> y{1.0};
    y = integrate_rk4(decay, y, 0.1);
    CHECK(std::abs(y[0] - 0.904837418) < 1e-7);
}

TEST_CASE("one Euler step of exponential decay") {
    std::array<double, 1> y{1.0};
    y = integrate_euler(decay, y, 0.1);
    CHECK(y[0] == doctest::Approx(0.9).epsilon(1e-15));
}

TEST_CASE("halving the step divides the global error by about sixteen") {
    const double coarse = global_error(0.02);
    const double fine = global_error(0.01);
    const double ratio = coarse / fine;
    CHECK(ratio > 11.0);
    CHECK(ratio < 21.0);
}

TEST_CASE("dispatch by integrator kind") {
    std::array<double, 1> y{1.0};
    const auto euler = integrate_step(IntegratorKind::Euler, decay, y, 0.1);
    const auto rk4 = integrate_step(IntegratorKind::Rk4, decay, y, 0.1);
    CHECK(euler[0] == doctest::Approx(0.9));
    CHECK(rk4[0] == doctest::Approx(0.904837418).epsilon(1e-6));
}
