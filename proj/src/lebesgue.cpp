#include "ddeg/lebesgue.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>

namespace ddeg {

namespace {

void require_shared_grid(const Grid& a, const Grid& b) {
    if (!(a == b)) throw std::invalid_argument("fields must share one grid");
}

// Weighted modular sum over arbitrary sample points.
double modular_at(std::span<const double> vals, std::span<const double> q,
                  std::span<const double> w, double scale) {
    double s = 0.0;
    for (size_t i = 0; i < vals.size(); ++i)
        s += w[i] * std::pow(std::abs(vals[i]) / scale, q[i]);
    return s;
}

std::vector<double> trapezoid_weights(const Grid& g) {
    std::vector<double> w(static_cast<size_t>(g.n), g.h);
    w.front() = 0.5 * g.h;
    w.back() = 0.5 * g.h;
    return w;
}

NormReport luxemburg_at(std::span<const double> vals, std::span<const double> q,
                        std::span<const double> w) {
    NormReport rep;
    rep.modular_value = modular_at(vals, q, w, 1.0);

    double sup = 0.0;
    for (double v : vals) sup = std::max(sup, std::abs(v));
    if (sup == 0.0) return rep;  // norm 0 for the zero function

    // Bracket the unit-modular scale by doubling/halving from max|f|.
    double lo = sup, hi = sup;
    while (modular_at(vals, q, w, hi) > 1.0) hi *= 2.0;
    while (modular_at(vals, q, w, lo) <= 1.0) {
        lo *= 0.5;
        if (lo < 1e-300) break;  // modular below 1 for every scale (tiny domain)
    }

    int iters = 0;
    while (hi - lo > 1e-10 * (1.0 + hi)) {
        const double mid = 0.5 * (lo + hi);
        if (modular_at(vals, q, w, mid) <= 1.0)
            hi = mid;
        else
            lo = mid;
        ++iters;
    }
    rep.luxemburg_norm = hi;  // modular(f/hi) <= 1 by construction
    rep.bisection_iterations = iters;
    rep.bracket_low = lo;
    rep.bracket_high = hi;
    return rep;
}

}  // namespace

double modular(const ScalarField& f, const ExponentField& q) {
    require_shared_grid(f.grid, q.grid);
    const auto w = trapezoid_weights(f.grid);
    return modular_at(f.values, q.p, w, 1.0);
}

double modular(const FaceField& f, const ExponentField& q) {
    require_shared_grid(f.grid, q.grid);
    const auto qf = face_exponents(q);
    const std::vector<double> w(f.values.size(), f.grid.h);
    return modular_at(f.values, qf, w, 1.0);
}

NormReport luxemburg_norm(const ScalarField& f, const ExponentField& q) {
    require_shared_grid(f.grid, q.grid);
    const auto w = trapezoid_weights(f.grid);
    return luxemburg_at(f.values, q.p, w);
}

NormReport luxemburg_norm(const FaceField& f, const ExponentField& q) {
    require_shared_grid(f.grid, q.grid);
    const auto qf = face_exponents(q);
    const std::vector<double> w(f.values.size(), f.grid.h);
    return luxemburg_at(f.values, qf, w);
}

NormReport luxemburg_norm(const FaceField& f, const std::vector<double>& face_q) {
    if (face_q.size() != f.values.size())
        throw std::invalid_argument("luxemburg_norm: face exponent size mismatch");
    const std::vector<double> w(f.values.size(), f.grid.h);
    return luxemburg_at(f.values, face_q, w);
}

ExponentField conjugate(const ExponentField& q) {
    std::vector<double> out(q.p.size());
    for (size_t i = 0; i < q.p.size(); ++i) {
        if (q.p[i] <= 1.0 + 1e-12)
            throw std::invalid_argument("conjugate: exponent too close to 1");
        out[i] = q.p[i] / (q.p[i] - 1.0);
    }
    return make_exponent_field(q.grid, std::move(out));
}

double v_norm(const ScalarField& u, const ExponentField& p) {
    require_shared_grid(u.grid, p.grid);
    const auto two = make_exponent_field(u.grid, [](double) { return 2.0; });
    const double l2 = std::sqrt(modular(u, two));
    return l2 + luxemburg_norm(gradient(u), p).luxemburg_norm;
}

HolderReport holder_check(const ScalarField& f, const ScalarField& g, const ExponentField& q) {
    require_shared_grid(f.grid, g.grid);
    require_shared_grid(f.grid, q.grid);
    std::vector<double> prod(f.values.size());
    for (size_t i = 0; i < prod.size(); ++i) prod[i] = std::abs(f.values[i] * g.values[i]);
    HolderReport rep;
    rep.lhs = integrate(ScalarField(f.grid, std::move(prod)));
    rep.rhs = 2.0 * luxemburg_norm(f, q).luxemburg_norm *
              luxemburg_norm(g, conjugate(q)).luxemburg_norm;
    rep.ok = rep.lhs <= rep.rhs * (1.0 + 1e-8);
    return rep;
}

bool modular_norm_bracket_check(const ScalarField& f, const ExponentField& q) {
    const auto rep = luxemburg_norm(f, q);
    if (rep.luxemburg_norm <= 0.0)
        throw std::invalid_argument("modular_norm_bracket_check: requires nonzero f");
    const double lo_pow = std::pow(rep.luxemburg_norm, q.p_minus);
    const double hi_pow = std::pow(rep.luxemburg_norm, q.p_plus);
    const double lo = std::min(lo_pow, hi_pow);
    const double hi = std::max(lo_pow, hi_pow);
    const double rho = rep.modular_value;
    return rho >= lo * (1.0 - 1e-8) && rho <= hi * (1.0 + 1e-8);
}

}  // namespace ddeg
