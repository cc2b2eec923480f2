#include "ddeg/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ddeg {

double ProblemSpec::K() const {
    double k = 0.0;
    for (double x : u0.values) k = std::max(k, x);
    return k;
}

void ProblemSpec::validate() const {
    if (!(grid == p.grid) || !(grid == u0.grid))
        throw std::invalid_argument("ProblemSpec: fields must share the grid");
    if (!(T > 0.0)) throw std::invalid_argument("ProblemSpec: need T > 0");
    if (!(epsilon > 0.0) || epsilon > 1.0)
        throw std::invalid_argument("ProblemSpec: need epsilon in (0, 1]");
    for (double x : u0.values)
        if (x < 0.0) throw std::invalid_argument("ProblemSpec: u0 must be nonnegative");
    if (u0.values.front() != 0.0 || u0.values.back() != 0.0)
        throw std::invalid_argument("ProblemSpec: u0 must vanish at the boundary nodes");
}

double dirichlet_energy(const ScalarField& u, const ExponentField& p) {
    const FaceField g = gradient(u);
    const auto pf = face_exponents(p);
    double e = 0.0;
    for (size_t i = 0; i < pf.size(); ++i)
        e += (1.0 / pf[i]) * std::pow(std::abs(g.values[i]), pf[i]);
    return e * u.grid.h;
}

ScalarField initial_v(const ProblemSpec& spec) {
    std::vector<double> v(static_cast<size_t>(spec.grid.n));
    for (int i = 0; i < spec.grid.n; ++i)
        v[i] = phi(spec.u0[i] + spec.epsilon, spec.regime);
    return ScalarField(spec.grid, std::move(v));
}

FaceField face_coefficient(const ScalarField& v, const ProblemSpec& spec,
                           const SolverConfig& cfg) {
    const CutoffParams cut{spec.epsilon, spec.K()};
    const auto pf = face_exponents(spec.p);
    const FaceField g = gradient(v);
    std::vector<double> a(pf.size());
    for (size_t i = 0; i < pf.size(); ++i) {
        const double abar = 0.5 * (cutoff_A(v[static_cast<int>(i)], spec.regime, cut) +
                                   cutoff_A(v[static_cast<int>(i) + 1], spec.regime, cut));
        const double g2 = g.values[i] * g.values[i] + cfg.delta_g * cfg.delta_g;
        a[i] = std::pow(abar, pf[i] - 1.0) * std::pow(g2, 0.5 * (pf[i] - 2.0));
    }
    return FaceField(spec.grid, std::move(a));
}

namespace {

// Thomas solve for the interior rows of (v/dt - div(a grad v)) = rhs with
// Dirichlet values pinned at both ends. SPD tridiagonal, no pivoting needed.
void solve_frozen(const ScalarField& v_n, const FaceField& a, double dt, double vb,
                  ScalarField& out) {
    const int n = v_n.grid.n;
    const double h2 = v_n.grid.h * v_n.grid.h;
    const int m = n - 2;
    std::vector<double> diag(m), upper(m), rhs(m);
    for (int i = 1; i <= m; ++i) {
        const double al = a[i - 1], ar = a[i];
        diag[i - 1] = 1.0 / dt + (al + ar) / h2;
        upper[i - 1] = -ar / h2;
        rhs[i - 1] = v_n[i] / dt;
    }
    rhs[0] += (a[0] / h2) * vb;
    rhs[m - 1] += (a[n - 2] / h2) * vb;

    // forward elimination (lower entries mirror upper of the previous row)
    for (int i = 1; i < m; ++i) {
        const double l = -a[i] / h2;
        const double w = l / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    out.values[0] = vb;
    out.values[n - 1] = vb;
    out.values[m] = rhs[m - 1] / diag[m - 1];
    for (int i = m - 2; i >= 0; --i)
        out.values[i + 1] = (rhs[i] - upper[i] * out.values[i + 2]) / diag[i + 1 - 1];
}

}  // namespace

StepResult implicit_step(const ScalarField& v_n, double dt, const ProblemSpec& spec,
                         const SolverConfig& cfg) {
    const double vb = phi(spec.epsilon, spec.regime);
    StepResult res;
    res.v = v_n;
    ScalarField w = v_n;
    ScalarField next(v_n.grid, 0.0);
    for (int k = 1; k <= cfg.picard_max; ++k) {
        const FaceField a = face_coefficient(w, spec, cfg);
        solve_frozen(v_n, a, dt, vb, next);
        double change = 0.0;
        for (int i = 0; i < v_n.grid.n; ++i)
            change = std::max(change, std::abs(next[i] - w[i]));
        w = next;
        res.iterations = k;
        res.residual = change;
        if (change < cfg.picard_tol * (1.0 + max_abs(w))) {
            res.converged = true;
            break;
        }
    }
    res.v = w;
    return res;
}

namespace {

ScalarField advance(const ScalarField& v_n, double dt, const ProblemSpec& spec,
                    const SolverConfig& cfg, int depth, int& iters) {
    const StepResult res = implicit_step(v_n, dt, spec, cfg);
    iters += res.iterations;
    if (res.converged) return res.v;
    if (depth >= cfg.max_halvings)
        throw std::runtime_error("solve_regularized: Picard failed after " +
                                 std::to_string(cfg.max_halvings) +
                                 " dt halvings (residual " + std::to_string(res.residual) + ")");
    const ScalarField mid = advance(v_n, 0.5 * dt, spec, cfg, depth + 1, iters);
    return advance(mid, 0.5 * dt, spec, cfg, depth + 1, iters);
}

}  // namespace

Trajectory solve_regularized(const ProblemSpec& spec, const SolverConfig& cfg) {
    spec.validate();
    const double K = spec.K();
    const double dt_req = cfg.dt > 0.0 ? cfg.dt : spec.T / 200.0;
    const int steps = std::max(1, static_cast<int>(std::llround(spec.T / dt_req)));
    const double dt = spec.T / steps;

    Trajectory traj;
    traj.grid = spec.grid;
    traj.regime = spec.regime;
    traj.epsilon = spec.epsilon;
    traj.K = K;

    // maximum-principle band in v (orientation depends on the regime)
    const double v_eps = phi(spec.epsilon, spec.regime);
    const double v_K = phi(K + spec.epsilon, spec.regime);
    const double v_lo = std::min(v_eps, v_K);
    const double v_hi = std::max(v_eps, v_K);
    const double v_tol = 1e-8 * (1.0 + std::abs(v_K));

    ScalarField v = initial_v(spec);
    auto push = [&](double t, const ScalarField& vf, double dissipation, int iters) {
        std::vector<double> uv(static_cast<size_t>(spec.grid.n));
        for (int i = 0; i < spec.grid.n; ++i) uv[i] = psi(vf[i], spec.regime);
        ScalarField uf(spec.grid, std::move(uv));
        StepDiagnostics d;
        d.energy = dirichlet_energy(uf, spec.p);
        d.dissipation = dissipation;
        d.min_u = *std::min_element(uf.values.begin(), uf.values.end());
        d.max_u = *std::max_element(uf.values.begin(), uf.values.end());
        d.picard_iters = iters;
        traj.times.push_back(t);
        traj.u.push_back(std::move(uf));
        traj.v.push_back(vf);
        traj.diagnostics.push_back(d);
    };
    push(0.0, v, 0.0, 0);

    for (int s = 1; s <= steps; ++s) {
        int iters = 0;
        ScalarField v_next = advance(v, dt, spec, cfg, 0, iters);
        for (int i = 0; i < spec.grid.n; ++i) {
            if (v_next[i] < v_lo - v_tol || v_next[i] > v_hi + v_tol)
                throw std::runtime_error("solve_regularized: maximum-principle violation");
        }
        // weighted dissipation increment: dt * int u^{-m} ((u_next-u)/dt)^2,
        // u evaluated at the step midpoint
        const ScalarField& u_prev = traj.u.back();
        std::vector<double> integ(static_cast<size_t>(spec.grid.n));
        for (int i = 0; i < spec.grid.n; ++i) {
            const double un = psi(v_next[i], spec.regime);
            const double du = (un - u_prev[i]) / dt;
            const double umid = 0.5 * (un + u_prev[i]);
            integ[i] = std::pow(umid, -spec.regime.m) * du * du;
        }
        const double diss = dt * integrate(ScalarField(spec.grid, std::move(integ)));
        v = std::move(v_next);
        push(s * dt, v, diss, iters);
    }
    return traj;
}

}  // namespace ddeg
