// eps -> 0 continuation: a decreasing schedule of regularized solves with
// pairwise comparison checks and a pointwise limit estimate.
#pragma once

#include <string>
#include <vector>

#include "ddeg/solver.hpp"

namespace ddeg {

struct ContinuationResult {
    std::vector<double> epsilons;          // strictly decreasing
    std::vector<Trajectory> trajectories;  // one per completed eps
    std::vector<double> pair_violations;   // max (u_small - u_big)_+ per adjacent pair
    std::vector<double> cauchy_gaps;       // max-norm gap per adjacent pair
    std::vector<ScalarField> limit_estimate;  // pointwise infimum over eps, per time
    bool complete = false;
    std::string error;                     // set when a solve failed; partial results kept
};

// Max over nodes and times of (u_small - u_big)_+; the first trajectory must
// be the smaller-eps run. Grids and times must match.
double comparison_check(const Trajectory& traj_small, const Trajectory& traj_big);

// Solves the spec for each eps in the schedule (spec.epsilon is overridden).
ContinuationResult run_continuation(const ProblemSpec& spec, const SolverConfig& cfg,
                                    const std::vector<double>& schedule);

// Default geometric schedule eps0 * 2^{-k}.
std::vector<double> geometric_schedule(double eps0, int levels);

}  // namespace ddeg
