#include "ddeg/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ddeg {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void require_finite(const std::vector<double>& v, const char* msg) {
    for (double x : v) require(std::isfinite(x), msg);
}

}  // namespace

Grid::Grid(double a_, double b_, int n_) : a(a_), b(b_), n(n_) {
    require(n >= 3, "Grid: need n >= 3");
    require(b > a, "Grid: need b > a");
    h = (b - a) / (n - 1);
}

ScalarField::ScalarField(const Grid& g, std::vector<double> vals)
    : grid(g), values(std::move(vals)) {
    require(static_cast<int>(values.size()) == grid.n, "ScalarField: size mismatch");
    require_finite(values, "ScalarField: non-finite value");
}

ScalarField::ScalarField(const Grid& g, double fill)
    : grid(g), values(static_cast<size_t>(g.n), fill) {
    require(std::isfinite(fill), "ScalarField: non-finite value");
}

FaceField::FaceField(const Grid& g, std::vector<double> vals)
    : grid(g), values(std::move(vals)) {
    require(static_cast<int>(values.size()) == grid.n - 1, "FaceField: size mismatch");
    require_finite(values, "FaceField: non-finite value");
}

FaceField::FaceField(const Grid& g, double fill)
    : grid(g), values(static_cast<size_t>(g.n - 1), fill) {
    require(std::isfinite(fill), "FaceField: non-finite value");
}

ScalarField sample(const Grid& g, const std::function<double(double)>& f) {
    std::vector<double> v(static_cast<size_t>(g.n));
    for (int i = 0; i < g.n; ++i) v[i] = f(g.x(i));
    return ScalarField(g, std::move(v));
}

FaceField gradient(const ScalarField& f) {
    const Grid& g = f.grid;
    std::vector<double> out(static_cast<size_t>(g.n - 1));
    for (int i = 0; i + 1 < g.n; ++i) out[i] = (f[i + 1] - f[i]) / g.h;
    return FaceField(g, std::move(out));
}

ScalarField divergence(const FaceField& g) {
    const Grid& gr = g.grid;
    std::vector<double> out(static_cast<size_t>(gr.n), 0.0);
    for (int i = 1; i + 1 < gr.n; ++i) out[i] = (g[i] - g[i - 1]) / gr.h;
    return ScalarField(gr, std::move(out));
}

double integrate(const ScalarField& f) {
    double s = 0.0;
    for (int i = 0; i + 1 < f.grid.n; ++i) s += 0.5 * (f[i] + f[i + 1]);
    return s * f.grid.h;
}

double integrate(const FaceField& f) {
    double s = 0.0;
    for (double v : f.values) s += v;
    return s * f.grid.h;
}

double max_abs(const ScalarField& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return m;
}

double max_abs(const FaceField& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return m;
}

double log_holder_estimate(const Grid& g, const std::vector<double>& p) {
    double worst = 0.0;
    const int n = g.n;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d = (j - i) * g.h;
            if (d > 0.5) break;
            worst = std::max(worst, std::abs(p[i] - p[j]) * std::log(1.0 / d));
        }
    }
    return worst;
}

ExponentField make_exponent_field(const Grid& g, std::vector<double> p) {
    if (static_cast<int>(p.size()) != g.n)
        throw std::invalid_argument("ExponentField: size mismatch");
    double lo = p[0], hi = p[0];
    for (double v : p) {
        if (!std::isfinite(v)) throw std::invalid_argument("ExponentField: non-finite exponent");
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (lo <= 1.0) throw std::invalid_argument("ExponentField: need p(x) > 1 everywhere");
    ExponentField q;
    q.grid = g;
    q.p = std::move(p);
    q.p_minus = lo;
    q.p_plus = hi;
    q.log_holder_modulus = log_holder_estimate(g, q.p);
    return q;
}

ExponentField make_exponent_field(const Grid& g, const std::function<double(double)>& p) {
    std::vector<double> v(static_cast<size_t>(g.n));
    for (int i = 0; i < g.n; ++i) v[i] = p(g.x(i));
    return make_exponent_field(g, std::move(v));
}

std::vector<double> face_exponents(const ExponentField& q) {
    std::vector<double> out(static_cast<size_t>(q.grid.n - 1));
    for (int i = 0; i + 1 < q.grid.n; ++i) out[i] = 0.5 * (q.p[i] + q.p[i + 1]);
    return out;
}

}  // namespace ddeg
