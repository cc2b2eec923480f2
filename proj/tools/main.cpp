// Command-line driver: regularized solves, eps-continuation, inequality
// fuzzing, Barenblatt reference checks and support tracking.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ddeg/config.hpp"
#include "ddeg/continuation.hpp"
#include "ddeg/fuzz.hpp"
#include "ddeg/io.hpp"
#include "ddeg/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ddeg;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunConfig load_config(const std::string& path, Mode expected) {
    RunConfig c = parse_config(slurp(path));
    if (c.mode != expected)
        throw std::runtime_error("config mode '" + mode_name(c.mode) +
                                 "' does not match subcommand '" + mode_name(expected) + "'");
    return c;
}

void write_report(const json& rep, const std::string& outdir) {
    write_text_file((fs::path(outdir) / "report.json").string(), rep.dump(2) + "\n");
}

json base_report(const RunConfig& c) {
    json rep;
    rep["tool_version"] = kToolVersion;
    rep["config"] = json::parse(config_echo(c));
    return rep;
}

int run_solve(const std::string& config_path, const std::string& outdir) {
    const RunConfig c = load_config(config_path, Mode::solve);
    const Trajectory traj = solve_regularized(c.problem(), c.solver);

    write_snapshots_csv(traj, (fs::path(outdir) / "snapshots.csv").string());
    write_diagnostics_csv(traj, (fs::path(outdir) / "diagnostics.csv").string());

    const EstimateReport est = estimate_integrals(traj, c.p);
    const EnergyMonotonicityReport mono = energy_monotonicity_check(traj);

    json rep = base_report(c);
    rep["checks"]["max_principle"] = {{"pass", est.bounds_ok},
                                      {"epsilon", traj.epsilon},
                                      {"K", traj.K}};
    rep["checks"]["energy_monotone"] = {{"pass", mono.pass},
                                        {"worst_step_increase", mono.worst_increase},
                                        {"slack", mono.slack}};
    rep["checks"]["estimates"] = {{"pass", est.energy_ok && est.dissipation_ok},
                                  {"weighted_dissipation", est.weighted_dissipation},
                                  {"sup_energy", est.sup_energy},
                                  {"initial_energy", est.initial_energy},
                                  {"final_energy", est.final_energy}};
    const bool pass = est.bounds_ok && mono.pass && est.energy_ok && est.dissipation_ok;
    rep["pass"] = pass;
    write_report(rep, outdir);
    std::cout << (pass ? "solve: all checks passed\n" : "solve: CHECK FAILED\n");
    return pass ? 0 : 1;
}

int run_continuation_cmd(const std::string& config_path, const std::string& outdir) {
    RunConfig c = load_config(config_path, Mode::continuation);
    ProblemSpec spec = c.problem();
    const ContinuationResult res = run_continuation(spec, c.solver, c.schedule);

    for (size_t k = 0; k < res.trajectories.size(); ++k) {
        std::ostringstream name;
        name << "snapshots_eps" << k << ".csv";
        write_snapshots_csv(res.trajectories[k], (fs::path(outdir) / name.str()).string());
    }

    json rep = base_report(c);
    rep["epsilons"] = res.epsilons;
    rep["cauchy_gaps"] = res.cauchy_gaps;
    rep["pair_violations"] = res.pair_violations;
    rep["complete"] = res.complete;
    if (!res.error.empty()) rep["error"] = res.error;

    const double K = spec.K();
    const double tol = 1e-8 * (1.0 + K);
    bool comparison_pass = res.complete;
    for (double v : res.pair_violations) comparison_pass = comparison_pass && v <= tol;

    bool boundary_pass = true;
    if (!res.limit_estimate.empty()) {
        const double eps_min = res.epsilons.back();
        for (const auto& f : res.limit_estimate) {
            if (f.values.front() > eps_min + tol || f.values.back() > eps_min + tol)
                boundary_pass = false;
        }
    }
    rep["checks"]["comparison"] = {{"pass", comparison_pass}, {"tolerance", tol}};
    rep["checks"]["boundary_consistency"] = {{"pass", boundary_pass}};
    const bool pass = comparison_pass && boundary_pass;
    rep["pass"] = pass;
    write_report(rep, outdir);
    std::cout << (pass ? "continuation: all checks passed\n" : "continuation: CHECK FAILED\n");
    return pass ? 0 : 1;
}

int run_verify_lemmas(long long samples, std::uint64_t seed, const std::string& outdir) {
    const MonotonicityFuzzReport mono = fuzz_monotonicity(samples, seed);
    const int field_trials =
        static_cast<int>(std::min<long long>(10000, std::max<long long>(1, samples / 100)));
    const FieldFuzzReport field = fuzz_field_inequalities(field_trials, seed + 1);

    json rep;
    rep["tool_version"] = kToolVersion;
    rep["seed"] = seed;
    rep["samples"] = mono.samples;
    rep["violations"] = mono.violations + field.holder_violations + field.bracket_violations +
                        field.field_gap_violations;
    rep["worst_margin"] = mono.worst_margin;
    rep["monotonicity"] = {{"samples", mono.samples},
                           {"violations", mono.violations},
                           {"worst_margin", mono.worst_margin}};
    rep["field"] = {{"trials", field.trials},
                    {"holder_violations", field.holder_violations},
                    {"bracket_violations", field.bracket_violations},
                    {"field_gap_violations", field.field_gap_violations},
                    {"worst_holder_margin", field.worst_holder_margin},
                    {"worst_field_gap_margin", field.worst_field_gap_margin}};
    const bool pass = rep["violations"].get<long long>() == 0;
    rep["pass"] = pass;
    write_report(rep, outdir);
    std::cout << (pass ? "verify-lemmas: zero violations\n" : "verify-lemmas: VIOLATIONS FOUND\n");
    return pass ? 0 : 1;
}

int run_barenblatt(double m, double t0, const std::string& grid_spec,
                   const std::string& times_spec, const std::string& outdir) {
    BarenblattParams bp;
    bp.m = m;
    bp.t0 = t0;
    bp.validate();

    std::vector<double> g, times;
    {
        std::stringstream gs(grid_spec), ts(times_spec);
        std::string tok;
        while (std::getline(gs, tok, ',')) g.push_back(std::stod(tok));
        while (std::getline(ts, tok, ',')) times.push_back(std::stod(tok));
    }
    if (g.size() != 3) throw std::runtime_error("barenblatt: --grid needs a,b,n");
    const Grid grid(g[0], g[1], static_cast<int>(std::llround(g[2])));
    const Grid fine(g[0], g[1], 2 * grid.n - 1);
    const double h_t = 1e-6;

    std::ostringstream csv;
    csv << "time,node_index,x,B\n";
    json per_time = json::array();
    bool pass = true;
    for (double t : times) {
        for (int i = 0; i < grid.n; ++i)
            csv << fmt17(t) << ',' << i << ',' << fmt17(grid.x(i)) << ','
                << fmt17(barenblatt_value(grid.x(i), t, bp)) << '\n';
        const double rc = barenblatt_residual(bp, grid, t, h_t);
        const double rf = barenblatt_residual(bp, fine, t, h_t);
        const double ratio = rf > 0.0 ? rc / rf : 0.0;
        const bool ok = ratio >= 3.0;
        pass = pass && ok;
        per_time.push_back({{"t", t},
                            {"residual_coarse", rc},
                            {"residual_fine", rf},
                            {"ratio", ratio},
                            {"edge", barenblatt_edge(t, bp)},
                            {"pass", ok}});
    }
    write_text_file((fs::path(outdir) / "barenblatt.csv").string(), csv.str());

    json rep;
    rep["tool_version"] = kToolVersion;
    rep["m"] = m;
    rep["t0"] = t0;
    rep["gamma"] = bp.gamma();
    rep["grid"] = {grid.a, grid.b, grid.n};
    rep["h_t"] = h_t;
    rep["residuals"] = per_time;
    rep["pass"] = pass;
    write_report(rep, outdir);
    std::cout << (pass ? "barenblatt: residual refinement consistent\n"
                       : "barenblatt: CHECK FAILED\n");
    return pass ? 0 : 1;
}

int run_support_check(const std::string& config_path, const std::string& outdir) {
    const RunConfig c = load_config(config_path, Mode::support_check);
    const Trajectory traj = solve_regularized(c.problem(), c.solver);
    write_snapshots_csv(traj, (fs::path(outdir) / "snapshots.csv").string());

    const SupportReport sr = support_nonexpansion_check(traj, c.delta_s, c.dilation_cells);

    json rep = base_report(c);
    rep["checks"]["support_nonexpansion"] = {
        {"pass", sr.pass},
        {"delta_s", sr.delta_s},
        {"dilation_cells", sr.dilation_cells},
        {"violations_per_time", sr.violations_per_time},
        {"first_violation_time", sr.first_violation_time}};
    rep["pass"] = sr.pass;
    write_report(rep, outdir);
    std::cout << (sr.pass ? "support-check: containment holds\n"
                          : "support-check: CONTAINMENT VIOLATED\n");
    return sr.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"regularized solver and verification suite for the doubly degenerate "
                 "p(x)-diffusion problem"};
    app.require_subcommand(1);

    std::string config_path, outdir = ".";
    long long samples = 1000000;
    std::uint64_t seed = 1;
    double m = 0.5, t0 = 1.0;
    std::string grid_spec = "-4,4,201", times_spec = "0,0.25,0.5";

    auto add_config_out = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file")->required();
        sub->add_option("--out", outdir, "output directory")->required();
    };

    auto* solve = app.add_subcommand("solve", "single regularized solve");
    add_config_out(solve);
    auto* cont = app.add_subcommand("continuation", "eps -> 0 schedule");
    add_config_out(cont);
    auto* lemmas = app.add_subcommand("verify-lemmas", "inequality fuzzing");
    lemmas->add_option("--samples", samples, "number of random samples");
    lemmas->add_option("--seed", seed, "RNG seed");
    lemmas->add_option("--out", outdir, "output directory")->required();
    auto* bb = app.add_subcommand("barenblatt", "reference-solution residual check");
    bb->add_option("--m", m, "exponent m in (0,1)");
    bb->add_option("--t0", t0, "time shift t0 > 0");
    bb->add_option("--grid", grid_spec, "a,b,n");
    bb->add_option("--times", times_spec, "comma-separated times");
    bb->add_option("--out", outdir, "output directory")->required();
    auto* sup = app.add_subcommand("support-check", "support non-expansion check");
    add_config_out(sup);

    CLI11_PARSE(app, argc, argv);

    try {
        fs::create_directories(outdir);
        if (solve->parsed()) return run_solve(config_path, outdir);
        if (cont->parsed()) return run_continuation_cmd(config_path, outdir);
        if (lemmas->parsed()) return run_verify_lemmas(samples, seed, outdir);
        if (bb->parsed()) return run_barenblatt(m, t0, grid_spec, times_spec, outdir);
        if (sup->parsed()) return run_support_check(config_path, outdir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
