// Run configuration: a single flat JSON document, strictly validated.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ddeg/solver.hpp"

namespace ddeg {

enum class Mode { solve, continuation, verify_lemmas, barenblatt, support_check };

std::string mode_name(Mode m);

struct RunConfig {
    Mode mode = Mode::solve;

    // problem
    double m = 1.0;
    std::string p_spec = "constant:2";          // "constant:<v>" | "linear:<a>,<b>" | nodal list
    std::string u0_spec = "zero";               // "zero" | "bump:<c>,<w>,<h>" | "barenblatt:<t0>" | nodal list
    std::vector<double> p_values;               // set when given as a nodal list
    std::vector<double> u0_values;
    Grid grid{0.0, 1.0, 101};
    double T = 0.1;
    double epsilon = 0.1;
    std::vector<double> schedule;               // continuation only; default geometric

    SolverConfig solver;

    // verification
    double delta_s = 0.01;
    int dilation_cells = 1;
    std::uint64_t seed = 1;
    long long samples = 1000000;

    // Materialized fields (built by parse_config).
    ExponentField p;
    ScalarField u0;

    ProblemSpec problem() const;
};

// Parses and validates the JSON text; unknown keys are rejected, defaults are
// filled (dt = T/200, picard_tol = 1e-9, picard_max = 100, delta_g = 1e-8,
// schedule = 0.1 * 2^{-k} with 4 levels, delta_s = 0.01, dilation = 1).
RunConfig parse_config(const std::string& text);

// Canonical JSON echo; parse_config(config_echo(c)) reproduces c.
std::string config_echo(const RunConfig& c);

// Builders shared with the CLI.
ExponentField build_exponent(const Grid& g, const std::string& spec,
                             const std::vector<double>& nodal);
ScalarField build_u0(const Grid& g, double m, const std::string& spec,
                     const std::vector<double>& nodal);

}  // namespace ddeg
