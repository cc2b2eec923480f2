#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ddeg/config.hpp"
#include "ddeg/io.hpp"

using namespace ddeg;

namespace {
const char* kMinimal =
    R"({"mode":"solve","m":1,"p":"constant:2","u0":"zero","grid":"0,1,101","T":0.1,"epsilon":0.1})";
}

TEST_CASE("minimal config parses with defaults") {
    const RunConfig c = parse_config(kMinimal);
    CHECK(c.mode == Mode::solve);
    CHECK(c.m == 1.0);
    CHECK(c.grid.n == 101);
    CHECK(c.solver.dt == doctest::Approx(0.1 / 200));
    CHECK(c.solver.picard_tol == 1e-9);
    CHECK(c.solver.picard_max == 100);
    CHECK(c.solver.delta_g == 1e-8);
    CHECK(c.delta_s == 0.01);
    CHECK(c.dilation_cells == 1);
    CHECK(c.p.p_minus == doctest::Approx(2.0));
    for (int i = 0; i < c.grid.n; ++i) CHECK(c.u0[i] == 0.0);
}

TEST_CASE("invalid configs are rejected") {
    CHECK_THROWS_AS(parse_config("{"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config(R"({"m":1})"), std::invalid_argument);  // no mode
    CHECK_THROWS_AS(
        parse_config(
            R"({"mode":"solve","m":1,"p":"constant:1.0","u0":"zero","grid":"0,1,11","T":0.1,"epsilon":0.1})"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        parse_config(
            R"({"mode":"solve","m":1,"p":"constant:2","u0":"zero","grid":"0,1,11","T":0.1,"epsilon":0})"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        parse_config(
            R"({"mode":"solve","m":1,"p":"constant:2","u0":"zero","grid":"0,1,11","T":0.1,"epsilon":0.1,"frobnicate":3})"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        parse_config(
            R"({"mode":"solve","m":-1,"p":"constant:2","u0":"zero","grid":"0,1,11","T":0.1,"epsilon":0.1})"),
        std::invalid_argument);
}

TEST_CASE("config echo round-trips") {
    const RunConfig c = parse_config(
        R"({"mode":"continuation","m":2,"p":"linear:1.5,2.5","u0":"bump:0.5,0.2,1","grid":"0,1,51","T":0.05,"epsilon":0.1,"schedule":[0.1,0.05],"seed":42})");
    const RunConfig d = parse_config(config_echo(c));
    CHECK(d.mode == c.mode);
    CHECK(d.m == c.m);
    CHECK(d.grid.n == c.grid.n);
    CHECK(d.schedule == c.schedule);
    CHECK(d.seed == c.seed);
    CHECK(d.solver.dt == c.solver.dt);
    for (int i = 0; i < c.grid.n; ++i) {
        CHECK(d.p[i] == doctest::Approx(c.p[i]).epsilon(1e-15));
        CHECK(d.u0[i] == doctest::Approx(c.u0[i]).epsilon(1e-15));
    }
    // the echo itself is stable
    CHECK(config_echo(d) == config_echo(c));
}

TEST_CASE("u0 builders") {
    Grid g(0.0, 1.0, 101);
    const ScalarField b = build_u0(g, 1.0, "bump:0.5,0.2,1", {});
    CHECK(b[50] == doctest::Approx(1.0));
    CHECK(b[0] == 0.0);
    for (int i = 0; i < g.n; ++i) {
        const double x = g.x(i);
        if (x <= 0.4 || x >= 0.6)
            CHECK(b[i] == 0.0);  // supported exactly on [0.4, 0.6]
        else
            CHECK(b[i] > 0.0);
    }

    Grid wide(-4.0, 4.0, 201);
    const ScalarField bb = build_u0(wide, 0.5, "barenblatt:1", {});
    CHECK(bb[100] == doctest::Approx(1.0));  // peak at x = 0
    CHECK(bb[0] == 0.0);
    // Barenblatt support must fit inside the domain
    Grid narrow(-1.0, 1.0, 21);
    CHECK_THROWS_AS(build_u0(narrow, 0.5, "barenblatt:1", {}), std::invalid_argument);
}

TEST_CASE("exponent builders") {
    Grid g(0.0, 1.0, 11);
    const ExponentField lin = build_exponent(g, "linear:1.5,2.5", {});
    CHECK(lin[0] == doctest::Approx(1.5));
    CHECK(lin[10] == doctest::Approx(2.5));
    CHECK(lin.p_minus == doctest::Approx(1.5));
    CHECK(lin.p_plus == doctest::Approx(2.5));
}

TEST_CASE("number formatting is value-faithful") {
    CHECK(fmt17(0.1) == "0.10000000000000001");
    CHECK(std::stod(fmt17(1.0 / 3.0)) == 1.0 / 3.0);
}
