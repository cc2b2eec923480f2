#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ddeg/grid.hpp"

using namespace ddeg;

TEST_CASE("grid construction and node coordinates") {
    Grid g(0.0, 1.0, 11);
    CHECK(g.h == doctest::Approx(0.1));
    CHECK(g.x(0) == 0.0);
    CHECK(g.x(10) == doctest::Approx(1.0));
    CHECK_THROWS_AS(Grid(0.0, 1.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(Grid(1.0, 0.0, 11), std::invalid_argument);
}

TEST_CASE("gradient of constant and linear fields") {
    Grid g(0.0, 1.0, 11);
    const FaceField gc = gradient(ScalarField(g, 3.7));
    for (int i = 0; i < gc.size(); ++i) CHECK(gc[i] == 0.0);

    const FaceField gl = gradient(sample(g, [](double x) { return x; }));
    for (int i = 0; i < gl.size(); ++i) CHECK(gl[i] == doctest::Approx(1.0));
}

TEST_CASE("gradient of x^2 hits the exact midpoint slope") {
    Grid g(0.0, 1.0, 11);
    const FaceField gr = gradient(sample(g, [](double x) { return x * x; }));
    // (x_{i+1}^2 - x_i^2)/h = x_i + x_{i+1}
    for (int i = 0; i < gr.size(); ++i)
        CHECK(gr[i] == doctest::Approx(g.x(i) + g.x(i + 1)).epsilon(1e-12));
}

TEST_CASE("trapezoid integration") {
    Grid g(0.0, 1.0, 101);
    CHECK(integrate(ScalarField(g, 1.0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(integrate(sample(g, [](double x) { return x; })) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(integrate(sample(g, [](double x) { return x * x; })) - 1.0 / 3.0) <
          2e-4);
}

TEST_CASE("integrate is linear") {
    Grid g(0.0, 2.0, 37);
    const ScalarField f = sample(g, [](double x) { return std::sin(3 * x); });
    const ScalarField w = sample(g, [](double x) { return std::exp(-x); });
    ScalarField combo(g, 0.0);
    for (int i = 0; i < g.n; ++i) combo[i] = 2.5 * f[i] - 0.75 * w[i];
    CHECK(integrate(combo) ==
          doctest::Approx(2.5 * integrate(f) - 0.75 * integrate(w)).epsilon(1e-12));
}

TEST_CASE("summation by parts: divergence is the adjoint of gradient") {
    Grid g(0.0, 1.0, 17);
    const FaceField q = gradient(sample(g, [](double x) { return std::cos(5 * x); }));
    // phi vanishing at both boundary nodes
    ScalarField phi = sample(g, [](double x) { return x * (1 - x) * std::sin(7 * x); });
    phi[0] = phi[g.n - 1] = 0.0;

    double lhs = 0.0;
    for (int i = 0; i + 1 < g.n; ++i) lhs += g.h * q[i] * (phi[i + 1] - phi[i]) / g.h;
    const ScalarField d = divergence(q);
    double rhs = 0.0;
    for (int i = 0; i < g.n; ++i) rhs += g.h * d[i] * phi[i];
    CHECK(lhs == doctest::Approx(-rhs).epsilon(1e-13));
    CHECK(d[0] == 0.0);
    CHECK(d[g.n - 1] == 0.0);
}

TEST_CASE("log-Holder modulus") {
    Grid g(0.0, 1.0, 11);
    CHECK(log_holder_estimate(g, std::vector<double>(11, 2.0)) == 0.0);

    // p(x) = 2 + x: brute-force enumeration over admissible pairs is the oracle
    std::vector<double> p(11);
    for (int i = 0; i < 11; ++i) p[i] = 2.0 + g.x(i);
    double expected = 0.0;
    for (int i = 0; i < 11; ++i)
        for (int j = 0; j < 11; ++j) {
            const double d = std::abs(g.x(i) - g.x(j));
            if (d > 0.0 && d <= 0.5)
                expected = std::max(expected, std::abs(p[i] - p[j]) * std::log(1.0 / d));
        }
    CHECK(log_holder_estimate(g, p) == doctest::Approx(expected).epsilon(1e-12));
    // adjacent pair on h = 0.1 contributes 0.1 log 10
    CHECK(expected >= 0.1 * std::log(10.0) - 1e-12);
}

TEST_CASE("exponent field validation and face sampling") {
    Grid g(0.0, 1.0, 5);
    CHECK_THROWS_AS(make_exponent_field(g, std::vector<double>(5, 1.0)),
                    std::invalid_argument);
    const ExponentField p = make_exponent_field(g, {1.5, 2.0, 2.5, 3.0, 3.5});
    CHECK(p.p_minus == 1.5);
    CHECK(p.p_plus == 3.5);
    const std::vector<double> fp = face_exponents(p);
    REQUIRE(fp.size() == 4);
    CHECK(fp[0] == doctest::Approx(1.75));
    CHECK(fp[3] == doctest::Approx(3.25));
}
