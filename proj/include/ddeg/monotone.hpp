// Executable oracles for the p-Laplace monotonicity inequalities.
#pragma once

#include <span>
#include <vector>

#include "ddeg/grid.hpp"

namespace ddeg {

struct VecPair {
    std::vector<double> xi;
    std::vector<double> eta;
    double p = 2.0;
};

// |v|^{p-2} v, extended by 0 at v = 0 for p < 2.
std::vector<double> flux(std::span<const double> v, double p);
double flux_scalar(double v, double p);

struct GapReport {
    double lhs = 0.0;
    double rhs = 0.0;
    bool ok = false;
};

// lhs = (flux(xi)-flux(eta)) . (xi-eta), rhs the regime-correct lower bound:
//   p >= 2 : 2^{1-p} |xi-eta|^p
//   1 <= p < 2 : (p-1)(|xi|^p+|eta|^p)^{(p-2)/p} |xi-eta|^2  (0 when xi=eta=0)
GapReport monotonicity_gap(const VecPair& pair);

struct FieldGapReport {
    double lhs = 0.0;
    double rhs_lest = 0.0;  // variable-exponent lower bound, populated when p+ <= 2
    double rhs_rest = 0.0;  // 2^{1-p+} int |Du-Dv|^{p(x)}, populated when p- >= 2
};

// Field-level version over face gradients. Requires at least one nonzero gradient.
FieldGapReport field_monotonicity_gap(const ScalarField& u, const ScalarField& v,
                                      const ExponentField& p);

}  // namespace ddeg
