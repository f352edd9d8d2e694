#include <doctest.h>

#include <cmath>

#include "ambsim/config.hpp"

using namespace ambsim;

TEST_CASE("empty scenario section keeps the stock defaults") {
    const ScenarioConfig cfg = parse_config("[scenario]\nkind = regulation\n");
    CHECK(cfg.gains.c == 17.0);
    CHECK(cfg.gains.k == 25.0);
    CHECK(cfg.gains.gamma == 1000.0);
    CHECK(cfg.gains.k_i == 152.0);
    CHECK(cfg.gains.p == 25.0);
    CHECK(cfg.gains.Q_z == 1.0);
    CHECK(cfg.A_r == 0.0025);
    CHECK(cfg.f_r == 2.0);
    CHECK(cfg.plant.m == 0.588);
    CHECK(cfg.plant.k_z == -754.0);
    CHECK(cfg.plant.s0 == 5e-3);
    // derived defaults materialize on resolve
    CHECK(cfg.duration == 2.0);
    CHECK(cfg.pulse.t_on == doctest::Approx(0.8));
    CHECK(cfg.pulse.t_off == doctest::Approx(1.2));
    CHECK(cfg.pulse.amplitude == 1.0);
    CHECK(cfg.epsilon_grad == doctest::Approx(40.0));
}

TEST_CASE("tracking defaults to five reference periods") {
    const ScenarioConfig cfg = parse_config("[scenario]\nkind = tracking\n");
    CHECK(cfg.duration == 2.5);
}

TEST_CASE("gain condition violations are reported") {
    CHECK_THROWS_WITH_AS(parse_config("[gains]\nk = 10\nQ_z = 25\n"),
                         doctest::Contains("k > Q_z"), ConfigError);
    CHECK_THROWS_AS(parse_config("[sim]\ndt = 0\n"), ConfigError);
}

TEST_CASE("unknown keys and sections are hard errors with locations") {
    try {
        parse_config("[plant]\nm = 1\nbogus = 2\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line() == 3);
        CHECK(doctest::Contains("bogus").checkWith(e.what()));
    }
    CHECK_THROWS_AS(parse_config("[warp]\nfactor = 9\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("m = 1\n"), ConfigError);  // key before section
}

TEST_CASE("malformed numbers carry line information") {
    try {
        parse_config("[gains]\nc = 17\nk = twenty\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("comments, whitespace and duplicate keys") {
    const char* text =
        "# full-line comment\n"
        "\n"
        "[gains]   # trailing comment\n"
        "  k = 30  # margin over the bound\n"
        "  k = 40\n";
    const ScenarioConfig cfg = parse_config(text);
    CHECK(cfg.gains.k == 40.0);  // last assignment wins
}

TEST_CASE("overrides apply after the document") {
    const ScenarioConfig cfg =
        parse_config("[gains]\nk = 30\n", {"gains.k=50", "scenario.seed=7"});
    CHECK(cfg.gains.k == 50.0);
    CHECK(cfg.seed == 7);
    CHECK_THROWS_AS(parse_config("", {"gains.k"}), ConfigError);
    CHECK_THROWS_AS(parse_config("", {"k=50"}), ConfigError);
}

TEST_CASE("initial condition spellings") {
    const ScenarioConfig warm = parse_config("[scenario]\ni0 = warm\ni_ref0 = warm\n");
    CHECK_FALSE(warm.initial.i0.has_value());
    CHECK(warm.initial.i_ref_warm_start);
    const ScenarioConfig cold =
        parse_config("[scenario]\ni0 = 0\ni_ref0 = 1.7e-3\n");
    REQUIRE(cold.initial.i0.has_value());
    CHECK(*cold.initial.i0 == 0.0);
    CHECK_FALSE(cold.initial.i_ref_warm_start);
    CHECK(cold.initial.i_ref0 == 1.7e-3);
}

TEST_CASE("pulse window invariants") {
    CHECK_THROWS_AS(parse_config("[scenario.pulse]\nt_on = 1.5\nt_off = 1.0\n"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config("[scenario.pulse]\namplitude = 5\n"),
                    ConfigError);  // exceeds Q_z
}

TEST_CASE("rendered config round trips") {
    const char* text =
        "[gains]\n"
        "gamma = 1e5\n"
        "[scenario]\n"
        "kind = tracking\n"
        "noise_interpretation = std\n"
        "z0 = 1.25e-6\n"
        "i_ref0 = 2.5e-3\n"
        "[sim]\n"
        "integrator = euler\n"
        "sgn_mode = ideal\n"
        "sgn_mode_inversion = approx\n"
        "u_max = 12.5\n";
    const ScenarioConfig cfg = parse_config(text);
    const std::string rendered = render_config(cfg);
    const ScenarioConfig again = parse_config(rendered);
    CHECK(render_config(again) == rendered);
    CHECK(again.kind == ScenarioKind::Tracking);
    CHECK(again.gains.gamma == cfg.gains.gamma);
    CHECK(again.integrator == IntegratorKind::Euler);
    CHECK(again.sgn_mode == SgnMode::Ideal);
    REQUIRE(again.sgn_mode_inversion.has_value());
    CHECK(*again.sgn_mode_inversion == SgnMode::Approx);
    CHECK(again.initial.z0 == cfg.initial.z0);
    CHECK(again.initial.i_ref0 == cfg.initial.i_ref0);
    CHECK(again.u_max == 12.5);
    CHECK(again.duration == cfg.duration);
    CHECK(again.pulse.t_on == cfg.pulse.t_on);
    CHECK(again.seed == cfg.seed);
}

TEST_CASE("enumeration values are checked") {
    CHECK_THROWS_AS(parse_config("[scenario]\nkind = hover\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[sim]\nintegrator = rk5\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[sim]\nsgn_mode = smooth\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[scenario]\nnoise_interpretation = power\n"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config("[sim]\nsingularity_policy = ignore\n"), ConfigError);
}

TEST_CASE("missing file is a config error") {
    CHECK_THROWS_AS(parse_config_file("/nonexistent/path.cfg"), ConfigError);
}
