#include "ddeg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ddeg {

int SupportMask::count() const {
    int c = 0;
    for (char b : mask) c += b != 0;
    return c;
}

SupportMask support_mask(const ScalarField& u, double delta_s) {
    if (!(delta_s > 0.0)) throw std::invalid_argument("support_mask: need delta_s > 0");
    SupportMask m;
    m.grid = u.grid;
    m.threshold = delta_s;
    m.mask.resize(u.values.size());
    for (size_t i = 0; i < u.values.size(); ++i) m.mask[i] = u.values[i] > delta_s;
    return m;
}

SupportMask dilate(const SupportMask& m, int cells) {
    SupportMask out = m;
    const int n = static_cast<int>(m.mask.size());
    for (int i = 0; i < n; ++i) {
        if (!m.mask[i]) continue;
        for (int j = std::max(0, i - cells); j <= std::min(n - 1, i + cells); ++j)
            out.mask[j] = 1;
    }
    return out;
}

bool is_subset(const SupportMask& inner, const SupportMask& outer) {
    for (size_t i = 0; i < inner.mask.size(); ++i)
        if (inner.mask[i] && !outer.mask[i]) return false;
    return true;
}

SupportReport support_nonexpansion_check(const Trajectory& traj, double delta_s,
                                         int dilation_cells) {
    if (delta_s <= 2.0 * traj.epsilon)
        throw std::invalid_argument(
            "support_nonexpansion_check: delta_s must exceed 2 eps (regularization floor)");
    // u0 = first snapshot minus the eps lift. The baseline mask uses the floor
    // threshold 2 eps (the smallest level separable from the regularization),
    // so it approximates supp u0 itself; the tracked masks use delta_s.
    ScalarField u0 = traj.u.front();
    for (double& x : u0.values) x -= traj.epsilon;
    const double delta_s0 = 2.0 * traj.epsilon;
    const SupportMask allowed = dilate(support_mask(u0, delta_s0), dilation_cells);

    SupportReport rep;
    rep.delta_s = delta_s;
    rep.dilation_cells = dilation_cells;
    rep.pass = true;
    for (size_t t = 0; t < traj.u.size(); ++t) {
        const SupportMask m = support_mask(traj.u[t], delta_s);
        int viol = 0;
        for (size_t i = 0; i < m.mask.size(); ++i)
            if (m.mask[i] && !allowed.mask[i]) ++viol;
        rep.violations_per_time.push_back(viol);
        if (viol > 0 && rep.pass) {
            rep.pass = false;
            rep.first_violation_time = traj.times[t];
        }
    }
    return rep;
}

void BarenblattParams::validate() const {
    if (!(m > 0.0) || m >= 1.0)
        throw std::invalid_argument("BarenblattParams: need m in (0,1)");
    if (!(t0 > 0.0)) throw std::invalid_argument("BarenblattParams: need t0 > 0");
    if (!(m * gamma() < 1.0))
        throw std::invalid_argument("BarenblattParams: need m*gamma < 1");
}

double barenblatt_value(double x, double t, const BarenblattParams& bp) {
    const double g = bp.gamma();
    const double tau = t + bp.t0;
    const double bracket =
        1.0 - (bp.m * g / (2.0 * bp.N)) * x * x / std::pow(tau, 1.0 - bp.m * g);
    if (bracket <= 0.0) return 0.0;
    return std::pow(tau, -g) * std::pow(bracket, 1.0 / bp.m);
}

double barenblatt_edge(double t, const BarenblattParams& bp) {
    const double g = bp.gamma();
    return std::sqrt(2.0 * bp.N * std::pow(t + bp.t0, 1.0 - bp.m * g) / (bp.m * g));
}

double barenblatt_level_radius(double t, double level, const BarenblattParams& bp) {
    const double g = bp.gamma();
    const double peak = std::pow(t + bp.t0, -g);
    if (level >= peak) return 0.0;
    // bracket^{1/m} = level / peak  at the crossing
    const double bracket = std::pow(level / peak, bp.m);
    return barenblatt_edge(t, bp) * std::sqrt(1.0 - bracket);
}

double barenblatt_residual(const BarenblattParams& bp, const Grid& grid, double t,
                           double h_t) {
    bp.validate();
    if (!(h_t > 0.0)) throw std::invalid_argument("barenblatt_residual: need h_t > 0");
    const double edge = barenblatt_edge(t, bp);
    double worst = 0.0;
    for (int i = 1; i + 1 < grid.n; ++i) {
        const double x = grid.x(i);
        if (std::abs(x) > edge - 3.0 * grid.h) continue;
        const double b = barenblatt_value(x, t, bp);
        const double lap = (barenblatt_value(x + grid.h, t, bp) - 2.0 * b +
                            barenblatt_value(x - grid.h, t, bp)) /
                           (grid.h * grid.h);
        const double dbdt = (barenblatt_value(x, t + h_t, bp) - b) / h_t;
        worst = std::max(worst, std::abs(std::pow(b, bp.m) * lap - dbdt));
    }
    return worst;
}

EstimateReport estimate_integrals(const Trajectory& traj, const ExponentField& p) {
    if (traj.u.size() < 2)
        throw std::invalid_argument("estimate_integrals: need a completed trajectory");
    EstimateReport rep;
    rep.initial_energy = dirichlet_energy(traj.u.front(), p);
    rep.final_energy = dirichlet_energy(traj.u.back(), p);
    rep.sup_energy = rep.initial_energy;
    for (size_t t = 1; t < traj.u.size(); ++t)
        rep.sup_energy = std::max(rep.sup_energy, dirichlet_energy(traj.u[t], p));

    const double m = traj.regime.m;
    for (size_t t = 1; t < traj.u.size(); ++t) {
        const double dt = traj.times[t] - traj.times[t - 1];
        std::vector<double> integ(static_cast<size_t>(traj.grid.n));
        for (int i = 0; i < traj.grid.n; ++i) {
            const double du = (traj.u[t][i] - traj.u[t - 1][i]) / dt;
            const double umid = 0.5 * (traj.u[t][i] + traj.u[t - 1][i]);
            integ[i] = std::pow(umid, -m) * du * du;
        }
        rep.weighted_dissipation += dt * integrate(ScalarField(traj.grid, std::move(integ)));
    }

    // absolute floor 1e-12 keeps zero-energy (static) runs from failing on roundoff
    const double slack = 1e-3;
    rep.energy_ok = rep.sup_energy <= rep.initial_energy * (1.0 + slack) + 1e-12;
    rep.dissipation_ok = rep.weighted_dissipation + rep.final_energy <=
                         rep.initial_energy * (1.0 + slack) + 1e-12;

    rep.bounds_ok = true;
    const double tol = 1e-8;
    for (const auto& d : traj.diagnostics) {
        if (d.min_u < traj.epsilon - tol || d.max_u > traj.K + traj.epsilon + tol)
            rep.bounds_ok = false;
    }
    return rep;
}

EnergyMonotonicityReport energy_monotonicity_check(const Trajectory& traj) {
    EnergyMonotonicityReport rep;
    rep.slack = 1e-6 * (1.0 + traj.diagnostics.front().energy);
    for (size_t t = 1; t < traj.diagnostics.size(); ++t)
        rep.worst_increase = std::max(
            rep.worst_increase, traj.diagnostics[t].energy - traj.diagnostics[t - 1].energy);
    rep.pass = rep.worst_increase <= rep.slack;
    return rep;
}

}  // namespace ddeg
