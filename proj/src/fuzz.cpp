#include "ddeg/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "ddeg/lebesgue.hpp"
#include "ddeg/monotone.hpp"

namespace ddeg {

MonotonicityFuzzReport fuzz_monotonicity(long long samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> entry(-10.0, 10.0);
    std::uniform_real_distribution<double> pdist(1.0, 10.0);
    std::uniform_int_distribution<int> ddist(1, 3);

    MonotonicityFuzzReport rep;
    rep.samples = samples;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    for (long long s = 0; s < samples; ++s) {
        VecPair pair;
        pair.p = pdist(rng);
        const int d = ddist(rng);
        pair.xi.resize(d);
        pair.eta.resize(d);
        for (int i = 0; i < d; ++i) {
            pair.xi[i] = entry(rng);
            pair.eta[i] = entry(rng);
        }
        const GapReport g = monotonicity_gap(pair);
        if (!g.ok) ++rep.violations;
        rep.worst_margin = std::min(rep.worst_margin, g.lhs - g.rhs);
    }
    return rep;
}

namespace {

// Smooth random field: a few sine modes plus an offset.
ScalarField random_smooth(const Grid& g, std::mt19937_64& rng, double amp) {
    std::uniform_real_distribution<double> coeff(-amp, amp);
    const double c0 = coeff(rng), c1 = coeff(rng), c2 = coeff(rng), c3 = coeff(rng);
    return sample(g, [&](double x) {
        using std::numbers::pi;
        return c0 + c1 * std::sin(pi * x) + c2 * std::sin(2.0 * pi * x) +
               c3 * std::sin(3.0 * pi * x);
    });
}

ExponentField random_exponent(const Grid& g, std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> base(lo, hi);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    const double b = base(rng);
    const double span = std::min(b - lo, hi - b);
    std::uniform_real_distribution<double> ampd(0.0, span);
    const double a = ampd(rng), ph = phase(rng);
    return make_exponent_field(
        g, [&](double x) { return b + a * std::sin(std::numbers::pi * x + ph); });
}

}  // namespace

FieldFuzzReport fuzz_field_inequalities(int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Grid g(0.0, 1.0, 41);

    FieldFuzzReport rep;
    rep.trials = trials;
    rep.worst_holder_margin = std::numeric_limits<double>::infinity();
    rep.worst_field_gap_margin = std::numeric_limits<double>::infinity();

    for (int t = 0; t < trials; ++t) {
        const ScalarField f = random_smooth(g, rng, 2.0);
        const ScalarField h = random_smooth(g, rng, 2.0);
        const ExponentField q = random_exponent(g, rng, 1.1, 4.0);

        const HolderReport hr = holder_check(f, h, q);
        if (!hr.ok) ++rep.holder_violations;
        rep.worst_holder_margin = std::min(rep.worst_holder_margin, hr.rhs - hr.lhs);

        if (max_abs(f) > 0.0 && !modular_norm_bracket_check(f, q)) ++rep.bracket_violations;

        // Singular range 1 < p < 2: lhs against the variable-exponent bound.
        {
            const ScalarField u = random_smooth(g, rng, 1.0);
            const ScalarField v = random_smooth(g, rng, 1.0);
            if (max_abs(gradient(u)) + max_abs(gradient(v)) > 0.0) {
                const ExponentField p = random_exponent(g, rng, 1.2, 1.8);
                const FieldGapReport fg = field_monotonicity_gap(u, v, p);
                const double margin = fg.lhs - fg.rhs_lest;
                rep.worst_field_gap_margin = std::min(rep.worst_field_gap_margin, margin);
                if (margin < -1e-8 * (1.0 + std::abs(fg.lhs))) ++rep.field_gap_violations;
            }
        }
        // Degenerate range p >= 2: lhs against 2^{1-p+} int |Du-Dv|^{p}.
        {
            const ScalarField u = random_smooth(g, rng, 1.0);
            const ScalarField v = random_smooth(g, rng, 1.0);
            if (max_abs(gradient(u)) + max_abs(gradient(v)) > 0.0) {
                const ExponentField p = random_exponent(g, rng, 2.0 + 1e-9, 3.0);
                const FieldGapReport fg = field_monotonicity_gap(u, v, p);
                const double margin = fg.lhs - fg.rhs_rest;
                rep.worst_field_gap_margin = std::min(rep.worst_field_gap_margin, margin);
                if (margin < -1e-8 * (1.0 + std::abs(fg.lhs))) ++rep.field_gap_violations;
            }
        }
    }
    return rep;
}

}  // namespace ddeg
