// Randomized sweeps over the inequality reporters. Deterministic per seed.
#pragma once

#include <cstdint>

namespace ddeg {

struct MonotonicityFuzzReport {
    long long samples = 0;
    long long violations = 0;
    double worst_margin = 0.0;  // min over samples of lhs - rhs
};

// Random (xi, eta, p) with p in [1,10], d in {1,2,3}, entries in [-10,10].
MonotonicityFuzzReport fuzz_monotonicity(long long samples, std::uint64_t seed);

struct FieldFuzzReport {
    int trials = 0;
    long long holder_violations = 0;
    long long bracket_violations = 0;
    long long field_gap_violations = 0;
    double worst_holder_margin = 0.0;     // min of rhs - lhs
    double worst_field_gap_margin = 0.0;  // min of lhs - applicable rhs
};

// Random smooth fields on [0,1]: generalized Holder, the modular-norm bracket
// and the field-level monotonicity bounds (singular and degenerate exponent
// ranges separately).
FieldFuzzReport fuzz_field_inequalities(int trials, std::uint64_t seed);

}  // namespace ddeg
