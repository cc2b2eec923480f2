#include "ddeg/transforms.hpp"

#include <cmath>
#include <stdexcept>

namespace ddeg {

Regime make_regime(double m) {
    if (!(m > 0.0) || !std::isfinite(m))
        throw std::invalid_argument("Regime: need finite m > 0");
    Regime r;
    r.m = m;
    r.kind = m < 1.0 ? RegimeKind::sub : (m > 1.0 ? RegimeKind::super : RegimeKind::log);
    return r;
}

double phi(double u, const Regime& r) {
    if (!(u > 0.0)) throw std::invalid_argument("phi: need u > 0");
    switch (r.kind) {
        case RegimeKind::sub:
            return std::pow(u, 1.0 - r.m) / (1.0 - r.m);
        case RegimeKind::log:
            return std::log(u);
        case RegimeKind::super:
            return std::pow(u, 1.0 - r.m) / (r.m - 1.0);
    }
    return 0.0;  // unreachable
}

double psi(double v, const Regime& r) {
    switch (r.kind) {
        case RegimeKind::sub:
            if (!(v > 0.0)) throw std::invalid_argument("psi: need v > 0 for m < 1");
            return std::pow((1.0 - r.m) * v, 1.0 / (1.0 - r.m));
        case RegimeKind::log:
            return std::exp(v);
        case RegimeKind::super:
            if (!(v > 0.0)) throw std::invalid_argument("psi: need v > 0 for m > 1");
            return std::pow((r.m - 1.0) * v, 1.0 / (1.0 - r.m));
    }
    return 0.0;  // unreachable
}

double psi_prime_abs(double v, const Regime& r) {
    return std::pow(psi(v, r), r.m);
}

double cutoff_A(double v, const Regime& r, const CutoffParams& c) {
    const double lo = std::pow(c.epsilon, r.m);
    const double hi = std::pow(c.K + c.epsilon, r.m);
    double slope;
    if (r.kind != RegimeKind::log && !(v > 0.0)) {
        // Outside the transform domain: the sub regime degenerates to u = 0,
        // the super regime blows up, so clamp to the corresponding edge.
        slope = r.kind == RegimeKind::sub ? lo : hi;
    } else {
        slope = psi_prime_abs(v, r);
    }
    return std::max(lo, std::min(slope, hi));
}

double smoothed_heaviside(double t, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("smoothed_heaviside: need eps > 0");
    if (t <= 0.0) return 0.0;
    if (t >= eps) return 1.0;
    return 2.0 * t / eps - (t * t) / (eps * eps);
}

}  // namespace ddeg
