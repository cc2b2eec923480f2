// Behavioral checks on solver output: support tracking, the Barenblatt
// reference solution and the a priori estimate integrals.
#pragma once

#include <vector>

#include "ddeg/solver.hpp"

namespace ddeg {

struct SupportMask {
    Grid grid;
    std::vector<char> mask;  // mask[i] <=> u_i > threshold
    double threshold = 0.0;

    int count() const;
};

SupportMask support_mask(const ScalarField& u, double delta_s);
SupportMask dilate(const SupportMask& m, int cells);
bool is_subset(const SupportMask& inner, const SupportMask& outer);

struct SupportReport {
    bool pass = false;
    double delta_s = 0.0;
    int dilation_cells = 0;
    std::vector<int> violations_per_time;  // nodes outside the dilated initial mask
    double first_violation_time = -1.0;
};

// Checks mask(u(t), delta_s) against the dilated baseline mask of u0 (recovered
// from the first snapshot minus eps, thresholded at the floor level 2 eps) at
// every recorded time. Rejects delta_s <= 2 eps.
SupportReport support_nonexpansion_check(const Trajectory& traj, double delta_s,
                                         int dilation_cells);

struct BarenblattParams {
    double m = 0.5;   // in (0,1)
    int N = 1;
    double t0 = 1.0;  // > 0

    double gamma() const { return N / (m * N + 2.0 - 2.0 * m); }
    void validate() const;
};

// B_m(x,t) = (t+t0)^{-gamma} (1 - (m gamma / 2N) |x|^2 (t+t0)^{m gamma - 1})_+^{1/m}.
double barenblatt_value(double x, double t, const BarenblattParams& bp);

// Support edge |x| = sqrt(2N (t+t0)^{1-m gamma} / (m gamma)).
double barenblatt_edge(double t, const BarenblattParams& bp);

// Radius of the level set {B_m(.,t) = level}; 0 if the level exceeds the peak.
double barenblatt_level_radius(double t, double level, const BarenblattParams& bp);

// Max over interior nodes at least 3 cells inside the support edge of
// |B^m * (discrete Laplacian of B) - forward time difference of B|.
double barenblatt_residual(const BarenblattParams& bp, const Grid& grid, double t, double h_t);

struct EstimateReport {
    double weighted_dissipation = 0.0;  // sum over steps of dt int u^{-m} (du/dt)^2
    double sup_energy = 0.0;            // max_t int (1/p)|Du(t)|^{p(x)}
    double initial_energy = 0.0;
    double final_energy = 0.0;
    bool bounds_ok = false;             // eps <= u <= K + eps within 1e-8
    bool energy_ok = false;             // sup_energy <= E(0) * (1 + 1e-3)
    bool dissipation_ok = false;        // dissipation + E(T) <= E(0) * (1 + 1e-3)
};

// Recomputes the estimate integrals from the snapshots (independently of the
// solver's own diagnostics).
EstimateReport estimate_integrals(const Trajectory& traj, const ExponentField& p);

struct EnergyMonotonicityReport {
    bool pass = false;
    double worst_increase = 0.0;  // max over steps of E(t_{k}) - E(t_{k-1})
    double slack = 0.0;           // 1e-6 * (1 + E(0))
};

// Per-step energy nonincrease within slack, from the recorded diagnostics.
EnergyMonotonicityReport energy_monotonicity_check(const Trajectory& traj);

}  // namespace ddeg
