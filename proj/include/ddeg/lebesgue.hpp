// Discrete variable-exponent Lebesgue machinery: modular, Luxemburg norm,
// conjugate exponent, the V-space norm and the inequality reporters.
#pragma once

#include "ddeg/grid.hpp"

namespace ddeg {

struct NormReport {
    double modular_value = 0.0;
    double luxemburg_norm = 0.0;
    int bisection_iterations = 0;
    double bracket_low = 0.0;
    double bracket_high = 0.0;
};

// Trapezoid value of the modular  int |f(x)|^{q(x)} dx.
double modular(const ScalarField& f, const ExponentField& q);
// Face-field modular; the exponent is sampled at faces by averaging.
double modular(const FaceField& f, const ExponentField& q);

// inf{ alpha > 0 : modular(f/alpha) <= 1 }, by bisection on the scale.
NormReport luxemburg_norm(const ScalarField& f, const ExponentField& q);
NormReport luxemburg_norm(const FaceField& f, const ExponentField& q);
// Variant with explicitly supplied per-face exponents.
NormReport luxemburg_norm(const FaceField& f, const std::vector<double>& face_q);

// q'(x) = q(x)/(q(x)-1); rejects exponents within 1e-12 of 1.
ExponentField conjugate(const ExponentField& q);

// ||u||_V = ||u||_2 + ||Du||_{p(.)}.
double v_norm(const ScalarField& u, const ExponentField& p);

struct HolderReport {
    double lhs = 0.0;
    double rhs = 0.0;
    bool ok = false;
};

// int |fg| <= 2 ||f||_{q(.)} ||g||_{q'(.)}.
HolderReport holder_check(const ScalarField& f, const ScalarField& g, const ExponentField& q);

// min{||f||^{q-},||f||^{q+}} <= modular(f) <= max{||f||^{q-},||f||^{q+}}.
// Requires a nonzero f.
bool modular_norm_bracket_check(const ScalarField& f, const ExponentField& q);

}  // namespace ddeg
