#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ddeg/continuation.hpp"

using namespace ddeg;

namespace {

ProblemSpec zero_spec(const Grid& g, double m) {
    ProblemSpec s;
    s.grid = g;
    s.regime = make_regime(m);
    s.p = make_exponent_field(g, std::vector<double>(static_cast<size_t>(g.n), 2.0));
    s.u0 = ScalarField(g, 0.0);
    s.T = 0.02;
    s.epsilon = 0.1;
    return s;
}

ProblemSpec bump_spec(const Grid& g, double m) {
    ProblemSpec s = zero_spec(g, m);
    s.u0 = sample(g, [](double x) {
        if (x <= 0.4 || x >= 0.6) return 0.0;
        const double c = std::cos(3.14159265358979323846 * (x - 0.5) / 0.2);
        return c * c;
    });
    s.u0[0] = s.u0[g.n - 1] = 0.0;
    return s;
}

}  // namespace

TEST_CASE("geometric schedule") {
    const std::vector<double> sch = geometric_schedule(0.1, 4);
    REQUIRE(sch.size() == 4);
    CHECK(sch[0] == doctest::Approx(0.1));
    CHECK(sch[3] == doctest::Approx(0.0125));
}

TEST_CASE("zero initial data: constant solutions, exact gaps") {
    Grid g(0.0, 1.0, 21);
    const ContinuationResult r =
        run_continuation(zero_spec(g, 1.0), SolverConfig{}, {0.1, 0.05, 0.025});
    REQUIRE(r.complete);
    REQUIRE(r.trajectories.size() == 3);
    for (size_t k = 0; k < 3; ++k)
        for (const auto& u : r.trajectories[k].u)
            for (int i = 0; i < g.n; ++i)
                CHECK(u[i] == doctest::Approx(r.epsilons[k]).epsilon(1e-12));
    REQUIRE(r.pair_violations.size() == 2);
    CHECK(r.pair_violations[0] == 0.0);
    CHECK(r.cauchy_gaps[0] == doctest::Approx(0.05).epsilon(1e-10));
    CHECK(r.cauchy_gaps[1] == doctest::Approx(0.025).epsilon(1e-10));
    // limit estimate bounded by the smallest eps
    for (const auto& f : r.limit_estimate)
        for (int i = 0; i < g.n; ++i) CHECK(f[i] <= 0.025 + 1e-12);
}

TEST_CASE("single-entry schedule degenerates to one solve") {
    Grid g(0.0, 1.0, 21);
    const ContinuationResult r =
        run_continuation(zero_spec(g, 1.0), SolverConfig{}, {0.1});
    REQUIRE(r.complete);
    CHECK(r.trajectories.size() == 1);
    CHECK(r.pair_violations.empty());
    CHECK(r.cauchy_gaps.empty());
}

TEST_CASE("schedule validation") {
    Grid g(0.0, 1.0, 11);
    CHECK_THROWS_AS(run_continuation(zero_spec(g, 1.0), SolverConfig{}, {0.05, 0.1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_continuation(zero_spec(g, 1.0), SolverConfig{}, {1.5, 0.1}),
                    std::invalid_argument);
}

TEST_CASE("comparison_check basics") {
    Grid g(0.0, 1.0, 21);
    const Trajectory t1 = solve_regularized(zero_spec(g, 1.0), SolverConfig{});
    CHECK(comparison_check(t1, t1) == 0.0);

    Grid g2(0.0, 1.0, 31);
    const Trajectory t2 = solve_regularized(zero_spec(g2, 1.0), SolverConfig{});
    CHECK_THROWS_AS(comparison_check(t1, t2), std::invalid_argument);
}

TEST_CASE("bump continuation: monotone family with decreasing gaps") {
    Grid g(0.0, 1.0, 51);
    const ProblemSpec s = bump_spec(g, 1.0);
    const ContinuationResult r =
        run_continuation(s, SolverConfig{}, {0.1, 0.05, 0.025, 0.0125});
    REQUIRE(r.complete);
    const double tol = 1e-8 * (1.0 + s.K());
    for (double v : r.pair_violations) CHECK(v <= tol);
    for (size_t k = 1; k < r.cauchy_gaps.size(); ++k)
        CHECK(r.cauchy_gaps[k] <= r.cauchy_gaps[k - 1]);
    // squeeze: limit estimate below every trajectory
    for (size_t k = 0; k < r.trajectories.size(); ++k)
        for (size_t t = 0; t < r.limit_estimate.size(); ++t)
            for (int i = 0; i < g.n; ++i) {
                CHECK(r.limit_estimate[t][i] >= 0.0);
                CHECK(r.limit_estimate[t][i] <= r.trajectories[k].u[t][i] + tol);
            }
    // boundary consistency
    for (const auto& f : r.limit_estimate) {
        CHECK(f[0] <= 0.0125 + tol);
        CHECK(f[g.n - 1] <= 0.0125 + tol);
    }
}
