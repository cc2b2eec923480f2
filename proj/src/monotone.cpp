#include "ddeg/monotone.hpp"

#include <cmath>
#include <stdexcept>

#include "ddeg/lebesgue.hpp"

namespace ddeg {

namespace {

double norm2(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

double flux_scalar(double v, double p) {
    if (v == 0.0) return 0.0;
    return std::pow(std::abs(v), p - 2.0) * v;
}

std::vector<double> flux(std::span<const double> v, double p) {
    const double r = norm2(v);
    std::vector<double> out(v.size(), 0.0);
    if (r == 0.0) return out;
    const double c = std::pow(r, p - 2.0);
    for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

GapReport monotonicity_gap(const VecPair& pair) {
    if (pair.xi.size() != pair.eta.size())
        throw std::invalid_argument("monotonicity_gap: dimension mismatch");
    if (pair.p < 1.0) throw std::invalid_argument("monotonicity_gap: need p >= 1");

    const auto fx = flux(pair.xi, pair.p);
    const auto fe = flux(pair.eta, pair.p);
    std::vector<double> diff(pair.xi.size());
    GapReport rep;
    for (size_t i = 0; i < diff.size(); ++i) {
        diff[i] = pair.xi[i] - pair.eta[i];
        rep.lhs += (fx[i] - fe[i]) * diff[i];
    }
    const double d = norm2(diff);

    if (pair.p >= 2.0) {
        rep.rhs = std::pow(2.0, 1.0 - pair.p) * std::pow(d, pair.p);
    } else {
        const double s = std::pow(norm2(pair.xi), pair.p) + std::pow(norm2(pair.eta), pair.p);
        // xi = eta = 0: continuous extension, both sides vanish.
        rep.rhs = (s == 0.0) ? 0.0
                             : (pair.p - 1.0) * std::pow(s, (pair.p - 2.0) / pair.p) * d * d;
    }
    rep.ok = rep.lhs >= rep.rhs - 1e-12 * (1.0 + std::abs(rep.lhs));
    return rep;
}

FieldGapReport field_monotonicity_gap(const ScalarField& u, const ScalarField& v,
                                      const ExponentField& p) {
    if (!(u.grid == v.grid) || !(u.grid == p.grid))
        throw std::invalid_argument("field_monotonicity_gap: fields must share one grid");

    const FaceField gu = gradient(u);
    const FaceField gv = gradient(v);
    if (max_abs(gu) == 0.0 && max_abs(gv) == 0.0)
        throw std::invalid_argument("field_monotonicity_gap: both gradients vanish");

    const auto pf = face_exponents(p);
    const double h = u.grid.h;

    FieldGapReport rep;
    double diff_modular = 0.0;  // int |Du-Dv|^{p(x)}
    for (size_t i = 0; i < pf.size(); ++i) {
        const double d = gu.values[i] - gv.values[i];
        rep.lhs += h * (flux_scalar(gu.values[i], pf[i]) - flux_scalar(gv.values[i], pf[i])) * d;
        diff_modular += h * std::pow(std::abs(d), pf[i]);
    }

    if (p.p_minus >= 2.0)
        rep.rhs_rest = std::pow(2.0, 1.0 - p.p_plus) * diff_modular;

    // The variable-exponent bound needs the weight norm with exponent 2/(2-p(x)),
    // which degenerates as p -> 2; it is only reported on strictly singular ranges.
    if (p.p_plus < 2.0 - 1e-12) {
        std::vector<double> weight(pf.size());
        std::vector<double> wexp(pf.size());
        for (size_t i = 0; i < pf.size(); ++i) {
            const double s = std::pow(std::abs(gu.values[i]), pf[i]) +
                             std::pow(std::abs(gv.values[i]), pf[i]);
            weight[i] = std::pow(s, (2.0 - pf[i]) / 2.0);
            wexp[i] = 2.0 / (2.0 - pf[i]);
        }
        const double wnorm =
            luxemburg_norm(FaceField(u.grid, std::move(weight)), wexp).luxemburg_norm;
        if (wnorm > 0.0) {
            const double ratio = diff_modular / (2.0 * wnorm);
            const double r1 = std::pow(ratio, 2.0 / p.p_minus);
            const double r2 = std::pow(ratio, 2.0 / p.p_plus);
            rep.rhs_lest = (p.p_minus - 1.0) * std::min(r1, r2);
        }
    }
    return rep;
}

}  // namespace ddeg
