#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ddeg/verify.hpp"

using namespace ddeg;

namespace {

Trajectory zero_run(const Grid& g, double m, double eps) {
    ProblemSpec s;
    s.grid = g;
    s.regime = make_regime(m);
    s.p = make_exponent_field(g, std::vector<double>(static_cast<size_t>(g.n), 2.0));
    s.u0 = ScalarField(g, 0.0);
    s.T = 0.02;
    s.epsilon = eps;
    return solve_regularized(s, SolverConfig{});
}

}  // namespace

TEST_CASE("support mask thresholding") {
    Grid g(0.0, 1.0, 11);
    CHECK(support_mask(ScalarField(g, 0.0), 0.5).count() == 0);
    // indicator bump of height 1 on [0.4, 0.6]
    ScalarField u(g, 0.0);
    u[4] = u[5] = u[6] = 1.0;
    const SupportMask m = support_mask(u, 0.5);
    CHECK(m.count() == 3);
    CHECK(m.mask[4] == 1);
    CHECK(m.mask[3] == 0);
    CHECK_THROWS_AS(support_mask(u, 0.0), std::invalid_argument);
    // monotone in the threshold
    CHECK(is_subset(support_mask(u, 0.7), support_mask(u, 0.2)));
}

TEST_CASE("dilation and subset") {
    Grid g(0.0, 1.0, 11);
    ScalarField u(g, 0.0);
    u[5] = 1.0;
    const SupportMask m = support_mask(u, 0.5);
    const SupportMask d = dilate(m, 2);
    CHECK(d.count() == 5);
    CHECK(d.mask[3] == 1);
    CHECK(d.mask[7] == 1);
    CHECK(d.mask[2] == 0);
    CHECK(is_subset(m, d));
    CHECK(!is_subset(d, m));
}

TEST_CASE("support non-expansion on a static run; floor rejection") {
    Grid g(0.0, 1.0, 21);
    const Trajectory tr = zero_run(g, 1.0, 0.001);
    const SupportReport r = support_nonexpansion_check(tr, 0.01, 1);
    CHECK(r.pass);
    for (int v : r.violations_per_time) CHECK(v == 0);
    CHECK_THROWS_AS(support_nonexpansion_check(tr, 0.002, 1), std::invalid_argument);
}

TEST_CASE("Barenblatt profile values") {
    BarenblattParams bp;  // m = 0.5, N = 1, t0 = 1
    bp.validate();
    CHECK(bp.gamma() == doctest::Approx(2.0 / 3.0));
    CHECK(barenblatt_value(0.0, 0.0, bp) == doctest::Approx(1.0));
    CHECK(barenblatt_edge(0.0, bp) == doctest::Approx(std::sqrt(6.0)));
    CHECK(barenblatt_value(3.0, 0.0, bp) == 0.0);
    // continuity across the edge
    const double e = barenblatt_edge(0.0, bp);
    CHECK(barenblatt_value(e - 1e-6, 0.0, bp) < 1e-8);
    // edge grows like (t + t0)^{(1 - m gamma)/2}
    CHECK(barenblatt_edge(0.5, bp) ==
          doctest::Approx(std::sqrt(6.0) * std::pow(1.5, 1.0 / 3.0)));
    BarenblattParams bad;
    bad.m = 1.5;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("Barenblatt level radius is consistent with the profile") {
    BarenblattParams bp;
    for (double t : {0.0, 0.5}) {
        for (double level : {0.01, 0.1, 0.5}) {
            const double r = barenblatt_level_radius(t, level, bp);
            CHECK(barenblatt_value(r, t, bp) == doctest::Approx(level).epsilon(1e-10));
            CHECK(r < barenblatt_edge(t, bp));
        }
    }
    CHECK(barenblatt_level_radius(0.0, 2.0, bp) == 0.0);  // above the peak
}

TEST_CASE("Barenblatt residual: second-order refinement and far field") {
    BarenblattParams bp;
    const Grid coarse(-4.0, 4.0, 201);
    const Grid fine(-4.0, 4.0, 401);
    for (double t : {0.0, 0.25}) {
        const double rc = barenblatt_residual(bp, coarse, t, 1e-6);
        const double rf = barenblatt_residual(bp, fine, t, 1e-6);
        CHECK(rc / rf >= 3.0);
    }
    // grid entirely outside the support: both sides of the identity vanish
    const Grid outside(5.0, 9.0, 41);
    CHECK(barenblatt_residual(bp, outside, 0.0, 1e-6) == 0.0);
}

TEST_CASE("estimate integrals on a static run") {
    Grid g(0.0, 1.0, 21);
    const Trajectory tr = zero_run(g, 1.0, 0.05);
    const ExponentField p =
        make_exponent_field(g, std::vector<double>(21, 2.0));
    const EstimateReport r = estimate_integrals(tr, p);
    CHECK(r.initial_energy == 0.0);
    CHECK(r.weighted_dissipation == doctest::Approx(0.0));
    CHECK(r.bounds_ok);
    CHECK(r.energy_ok);
    CHECK(r.dissipation_ok);
}

TEST_CASE("energy monotonicity report on a static run") {
    Grid g(0.0, 1.0, 21);
    const Trajectory tr = zero_run(g, 2.0, 0.05);
    const EnergyMonotonicityReport r = energy_monotonicity_check(tr);
    CHECK(r.pass);
    CHECK(r.worst_increase <= r.slack);
}
