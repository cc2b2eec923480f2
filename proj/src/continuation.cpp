#include "ddeg/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ddeg {

double comparison_check(const Trajectory& traj_small, const Trajectory& traj_big) {
    if (!(traj_small.grid == traj_big.grid) || traj_small.times != traj_big.times)
        throw std::invalid_argument("comparison_check: trajectories must share grid and times");
    double worst = 0.0;
    for (size_t t = 0; t < traj_small.u.size(); ++t)
        for (int i = 0; i < traj_small.grid.n; ++i)
            worst = std::max(worst, traj_small.u[t][i] - traj_big.u[t][i]);
    return std::max(worst, 0.0);
}

std::vector<double> geometric_schedule(double eps0, int levels) {
    std::vector<double> s(static_cast<size_t>(levels));
    for (int k = 0; k < levels; ++k) s[k] = eps0 * std::pow(2.0, -k);
    return s;
}

ContinuationResult run_continuation(const ProblemSpec& spec, const SolverConfig& cfg,
                                    const std::vector<double>& schedule) {
    if (schedule.empty())
        throw std::invalid_argument("run_continuation: empty schedule");
    for (size_t k = 0; k < schedule.size(); ++k) {
        if (!(schedule[k] > 0.0) || schedule[k] > 1.0)
            throw std::invalid_argument("run_continuation: schedule values must lie in (0,1]");
        if (k > 0 && !(schedule[k] < schedule[k - 1]))
            throw std::invalid_argument("run_continuation: schedule must be strictly decreasing");
    }

    ContinuationResult res;
    for (double eps : schedule) {
        ProblemSpec s = spec;
        s.epsilon = eps;
        try {
            res.trajectories.push_back(solve_regularized(s, cfg));
        } catch (const std::exception& e) {
            res.error = e.what();
            return res;
        }
        res.epsilons.push_back(eps);
    }

    for (size_t k = 1; k < res.trajectories.size(); ++k) {
        const Trajectory& big = res.trajectories[k - 1];
        const Trajectory& small = res.trajectories[k];
        res.pair_violations.push_back(comparison_check(small, big));
        double gap = 0.0;
        for (size_t t = 0; t < small.u.size(); ++t)
            for (int i = 0; i < small.grid.n; ++i)
                gap = std::max(gap, std::abs(small.u[t][i] - big.u[t][i]));
        res.cauchy_gaps.push_back(gap);
    }

    const Trajectory& first = res.trajectories.front();
    for (size_t t = 0; t < first.u.size(); ++t) {
        ScalarField inf = first.u[t];
        for (size_t k = 1; k < res.trajectories.size(); ++k)
            for (int i = 0; i < inf.grid.n; ++i)
                inf[i] = std::min(inf[i], res.trajectories[k].u[t][i]);
        res.limit_estimate.push_back(std::move(inf));
    }
    res.complete = true;
    return res;
}

}  // namespace ddeg
