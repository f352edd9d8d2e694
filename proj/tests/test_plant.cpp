#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ambsim/plant.hpp"

using namespace ambsim;

namespace {

PlantParams reference_params() { return PlantParams{}; }

// central finite difference oracles, independent of the analytic formulas
double fd_dv_di(const PlantParams& p, double z, double i, double h) {
    return (virtual_input(p, z, i + h) - virtual_input(p, z, i - h)) / (2.0 * h);
}

double fd_dv_dz(const PlantParams& p, double z, double i, double h) {
    return (virtual_input(p, z + h, i) - virtual_input(p, z - h, i)) / (2.0 * h);
}

// magnitude scale of the two-term gradient expressions; a plain relative
// error is meaningless where the terms cancel
double di_scale(const PlantParams& p, double z, double i) {
    const double gu = p.s0 - z;
    const double gd = p.s0 + z;
    return std::abs(2.0 * (p.i0 + i) / (gu * gu)) +
           std::abs(2.0 * (p.i0 - i) / (gd * gd));
}

}  // namespace

TEST_CASE("virtual input at the centered symmetric point is zero") {
    const PlantParams p = reference_params();
    CHECK(virtual_input(p, 0.0, 0.0) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("virtual input direct evaluation") {
    const PlantParams p = reference_params();
    // (0.35/0.005)^2 - (0.15/0.005)^2 = 4900 - 900
    CHECK(virtual_input(p, 0.0, 0.1) == doctest::Approx(4000.0).epsilon(1e-12));
}

TEST_CASE("virtual input is odd in z at zero deviation current") {
    const PlantParams p = reference_params();
    CHECK(virtual_input(p, 0.001, 0.0) ==
          doctest::Approx(-virtual_input(p, -0.001, 0.0)).epsilon(1e-12));
}

TEST_CASE("virtual input odd under joint sign flip of z and i") {
    const PlantParams p = reference_params();
    for (int zi = -4; zi <= 4; ++zi) {
        for (int ii = -4; ii <= 4; ++ii) {
            const double z = 0.8 * p.s0 * zi / 4.0;
            const double i = 2.0 * p.i0 * ii / 4.0;
            CAPTURE(z);
            CAPTURE(i);
            CHECK(virtual_input(p, z, i) ==
                  doctest::Approx(-virtual_input(p, -z, -i)).epsilon(1e-11));
        }
    }
}

TEST_CASE("virtual input rejects displacements outside the gap") {
    const PlantParams p = reference_params();
    CHECK_THROWS_AS(virtual_input(p, p.s0, 0.0), std::domain_error);
    CHECK_THROWS_AS(virtual_input(p, -1.1 * p.s0, 0.0), std::domain_error);
    CHECK_THROWS_AS(dv_di(p, p.s0, 0.0), std::domain_error);
    CHECK_THROWS_AS(dv_dz(p, -p.s0, 0.0), std::domain_error);
}

TEST_CASE("current gradient at the center") {
    const PlantParams p = reference_params();
    // 4 i0 / s0^2
    CHECK(dv_di(p, 0.0, 0.0) == doctest::Approx(40000.0).epsilon(1e-12));
    // at z = 0 the i-terms cancel and the gradient is current-independent
    CHECK(dv_di(p, 0.0, 0.1) == doctest::Approx(40000.0).epsilon(1e-12));
}

TEST_CASE("current gradient vanishes on the singular curve point") {
    const PlantParams p = reference_params();
    // z^2 + (2 s0/i0) i z + s0^2 = 0 holds at (-0.0025, 0.3125):
    // 1.125/5.625e-5 - 0.125/6.25e-6 = 20000 - 20000
    CHECK(std::abs(dv_di(p, -0.0025, 0.3125)) < 1e-6);
}

TEST_CASE("current gradient vanishes exactly on curve roots for |i| >= i0") {
    const PlantParams p = reference_params();
    for (double i : {0.25, 0.3, 0.3125, 0.5, 0.75, 1.0, -0.26, -0.4, -2.0}) {
        if (std::abs(i) < p.i0) continue;
        // roots of z^2 + (2 s0/i0) i z + s0^2 = 0; their product is s0^2, so
        // exactly one lies strictly inside the gap (or both sit at |z| = s0)
        const double disc = (i / p.i0) * (i / p.i0) - 1.0;
        const double root_term = p.s0 * std::sqrt(disc);
        const double mid = -p.s0 * i / p.i0;
        for (double z : {mid + root_term, mid - root_term}) {
            if (!(std::abs(z) < p.s0)) continue;
            CAPTURE(i);
            CAPTURE(z);
            const double margin = std::abs(dv_di(p, z, i));
            CHECK(margin <= 1e-9 * di_scale(p, z, i));
        }
    }
}

TEST_CASE("displacement gradient at the center") {
    const PlantParams p = reference_params();
    // 4 i0^2 / s0^3 = 0.25 / 1.25e-7
    CHECK(dv_dz(p, 0.0, 0.0) == doctest::Approx(2.0e6).epsilon(1e-12));
}

TEST_CASE("displacement gradient when the lower-coil current cancels") {
    const PlantParams p = reference_params();
    const double expected = 2.0 * (2.0 * p.i0) * (2.0 * p.i0) / (p.s0 * p.s0 * p.s0);
    CHECK(dv_dz(p, 0.0, p.i0) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("analytic gradients match central differences on a grid") {
    const PlantParams p = reference_params();
    const double h = 1e-9;
    for (int zi = 0; zi < 20; ++zi) {
        for (int ii = 0; ii < 20; ++ii) {
            const double z = -0.8 * p.s0 + 1.6 * p.s0 * zi / 19.0;
            const double i = -2.0 * p.i0 + 4.0 * p.i0 * ii / 19.0;
            CAPTURE(z);
            CAPTURE(i);
            const double an_di = dv_di(p, z, i);
            const double an_dz = dv_dz(p, z, i);
            CHECK(std::abs(fd_dv_di(p, z, i, h) - an_di) <=
                  1e-6 * di_scale(p, z, i));
            CHECK(std::abs(fd_dv_dz(p, z, i, h) - an_dz) <= 1e-6 * std::abs(an_dz));
        }
    }
}

TEST_CASE("open-loop derivative at the origin leaves only gravity") {
    const PlantParams p = reference_params();
    const PlantDeriv d = plant_derivative(p, PlantState{0.0, 0.0, 0.0}, 0.0, {});
    CHECK(d.z_dot == 0.0);
    CHECK(d.z_ddot == doctest::Approx(-p.g).epsilon(1e-15));
    CHECK(d.di_dt == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("hover fixture is an equilibrium") {
    const PlantParams p = reference_params();
    const double ih = hover_current(p);
    CHECK(ih == doctest::Approx(1.7411e-3).epsilon(1e-4));
    const PlantState hover{0.0, 0.0, ih};
    const PlantDeriv d = plant_derivative(p, hover, p.R * ih, {});
    CHECK(std::abs(d.z_dot) < 1e-9);
    CHECK(std::abs(d.z_ddot) < 1e-9);
    CHECK(std::abs(d.di_dt) < 1e-9);
}

TEST_CASE("current derivative with matched voltage reduces to the disturbance") {
    const PlantParams p = reference_params();
    const Disturbances dist{0.0, 0.37};
    const PlantDeriv d = plant_derivative(p, PlantState{0.0, 0.0, 1.0}, p.R, dist);
    CHECK(d.di_dt == doctest::Approx(dist.q_i).epsilon(1e-12));
}

TEST_CASE("hover current scaling") {
    PlantParams p = reference_params();
    const double base = hover_current(p);
    PlantParams no_gravity = p;
    no_gravity.g = 0.0;
    CHECK(hover_current(no_gravity) == 0.0);
    PlantParams heavy = p;
    heavy.m = 2.0 * p.m;
    CHECK(hover_current(heavy) == doctest::Approx(2.0 * base).epsilon(1e-12));
}

TEST_CASE("parameter validation flags non-positive constants") {
    PlantParams p = reference_params();
    CHECK_NOTHROW(p.validate());
    p.m = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = reference_params();
    p.s0 = -1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = reference_params();
    p.k_z = -754.0;  // negative stiffness is legal
    CHECK_NOTHROW(p.validate());
}
