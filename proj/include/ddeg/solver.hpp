// Implicit finite-difference solver for the divergence-form regularized
// problem  v_t = div(A^{p(x)-1} |Dv|^{p(x)-2} Dv)  with v = phi(u).
#pragma once

#include <vector>

#include "ddeg/grid.hpp"
#include "ddeg/transforms.hpp"

namespace ddeg {

struct ProblemSpec {
    Grid grid;
    Regime regime;
    ExponentField p;
    ScalarField u0;     // nonnegative, exactly zero at both boundary nodes
    double T = 0.0;
    double epsilon = 0.0;

    double K() const;   // max nodal u0
    void validate() const;
};

struct SolverConfig {
    double dt = 0.0;             // 0 means T/200
    double picard_tol = 1e-9;
    int picard_max = 100;
    double delta_g = 1e-8;       // gradient smoothing in |Dv|^{p-2}
    int max_halvings = 6;
};

struct StepDiagnostics {
    double energy = 0.0;       // int (1/p)|Du|^{p(x)} dx at this time
    double dissipation = 0.0;  // dt * int u^{-m} ((u_next-u_prev)/dt)^2 over the last step
    double min_u = 0.0;
    double max_u = 0.0;
    int picard_iters = 0;      // total over the step, including dt-halving retries
};

struct Trajectory {
    Grid grid;
    Regime regime;
    double epsilon = 0.0;
    double K = 0.0;
    std::vector<double> times;
    std::vector<ScalarField> u;
    std::vector<ScalarField> v;
    std::vector<StepDiagnostics> diagnostics;  // one per time, first has dissipation 0
};

// int (1/p(x)) |Du|^{p(x)} dx over faces.
double dirichlet_energy(const ScalarField& u, const ExponentField& p);

// v(x,0) = phi(u0 + eps); boundary nodes carry phi(eps).
ScalarField initial_v(const ProblemSpec& spec);

// Per-face diffusion coefficient a = Abar^{pbar-1} (g^2 + delta_g^2)^{(pbar-2)/2}
// with Abar the arithmetic mean of cutoff_A at the adjacent nodes.
FaceField face_coefficient(const ScalarField& v, const ProblemSpec& spec,
                           const SolverConfig& cfg);

struct StepResult {
    ScalarField v;
    int iterations = 0;
    bool converged = false;
    double residual = 0.0;  // last Picard max-norm change
};

// One backward-Euler step by Picard coefficient lagging; boundary rows are
// pinned to phi(eps). Non-convergence is reported, not thrown.
StepResult implicit_step(const ScalarField& v_n, double dt, const ProblemSpec& spec,
                         const SolverConfig& cfg);

// Marches 0 -> T, recording u = psi(v) and per-step diagnostics. Enforces the
// regularized maximum principle at every step and applies dt-halving retries
// when a step fails to converge.
Trajectory solve_regularized(const ProblemSpec& spec, const SolverConfig& cfg);

}  // namespace ddeg
