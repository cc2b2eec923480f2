#include "ddeg/config.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ddeg/verify.hpp"

namespace ddeg {

using nlohmann::json;

std::string mode_name(Mode m) {
    switch (m) {
        case Mode::solve: return "solve";
        case Mode::continuation: return "continuation";
        case Mode::verify_lemmas: return "verify-lemmas";
        case Mode::barenblatt: return "barenblatt";
        case Mode::support_check: return "support-check";
    }
    return "?";
}

namespace {

Mode parse_mode(const std::string& s) {
    if (s == "solve") return Mode::solve;
    if (s == "continuation") return Mode::continuation;
    if (s == "verify-lemmas") return Mode::verify_lemmas;
    if (s == "barenblatt") return Mode::barenblatt;
    if (s == "support-check") return Mode::support_check;
    throw std::invalid_argument("config: unknown mode '" + s + "'");
}

std::vector<double> parse_number_list(const std::string& s, const std::string& where) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        double v;
        try {
            v = std::stod(tok, &pos);
        } catch (...) {
            throw std::invalid_argument("config: bad number in " + where + ": '" + tok + "'");
        }
        if (pos != tok.size())
            throw std::invalid_argument("config: bad number in " + where + ": '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

void reject_unknown(const json& j, const std::set<std::string>& allowed) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.contains(it.key()))
            throw std::invalid_argument("config: unknown key '" + it.key() + "'");
}

}  // namespace

ExponentField build_exponent(const Grid& g, const std::string& spec,
                             const std::vector<double>& nodal) {
    if (!nodal.empty()) return make_exponent_field(g, nodal);
    if (spec.rfind("constant:", 0) == 0) {
        const auto v = parse_number_list(spec.substr(9), "p");
        if (v.size() != 1) throw std::invalid_argument("config: p constant needs one value");
        if (v[0] <= 1.0) throw std::invalid_argument("config: p must exceed 1");
        return make_exponent_field(g, [&](double) { return v[0]; });
    }
    if (spec.rfind("linear:", 0) == 0) {
        const auto v = parse_number_list(spec.substr(7), "p");
        if (v.size() != 2) throw std::invalid_argument("config: p linear needs two values");
        if (v[0] <= 1.0 || v[1] <= 1.0) throw std::invalid_argument("config: p must exceed 1");
        return make_exponent_field(g, [&](double x) {
            return v[0] + (v[1] - v[0]) * (x - g.a) / (g.b - g.a);
        });
    }
    throw std::invalid_argument("config: unrecognized p spec '" + spec + "'");
}

ScalarField build_u0(const Grid& g, double m, const std::string& spec,
                     const std::vector<double>& nodal) {
    if (!nodal.empty()) return ScalarField(g, nodal);
    if (spec == "zero") return ScalarField(g, 0.0);
    if (spec.rfind("bump:", 0) == 0) {
        const auto v = parse_number_list(spec.substr(5), "u0");
        if (v.size() != 3)
            throw std::invalid_argument("config: bump needs center,width,height");
        const double c = v[0], w = v[1], height = v[2];
        if (!(w > 0.0) || !(height > 0.0))
            throw std::invalid_argument("config: bump needs positive width and height");
        // cos^2 profile, supported exactly on [c-w/2, c+w/2]
        return sample(g, [&](double x) {
            const double r = (x - c) / (w / 2.0);
            // the >= 1 - 1e-12 guard absorbs node-coordinate roundoff so the
            // support stays exactly [c - w/2, c + w/2] on any grid
            if (std::abs(r) >= 1.0 - 1e-12) return 0.0;
            const double ct = std::cos(0.5 * std::numbers::pi * r);
            return height * ct * ct;
        });
    }
    if (spec.rfind("barenblatt:", 0) == 0) {
        const auto v = parse_number_list(spec.substr(11), "u0");
        if (v.size() != 1) throw std::invalid_argument("config: barenblatt needs t0");
        BarenblattParams bp;
        bp.m = m;
        bp.t0 = v[0];
        bp.validate();
        if (barenblatt_edge(0.0, bp) >= std::min(-g.a, g.b))
            throw std::invalid_argument("config: Barenblatt support exceeds the domain");
        return sample(g, [&](double x) { return barenblatt_value(x, 0.0, bp); });
    }
    throw std::invalid_argument("config: unrecognized u0 spec '" + spec + "'");
}

ProblemSpec RunConfig::problem() const {
    ProblemSpec s;
    s.grid = grid;
    s.regime = make_regime(m);
    s.p = p;
    s.u0 = u0;
    s.T = T;
    s.epsilon = epsilon;
    s.validate();
    return s;
}

RunConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
    reject_unknown(j, {"mode", "m", "p", "u0", "grid", "T", "epsilon", "schedule", "dt",
                       "picard_tol", "picard_max", "delta_g", "delta_s", "dilation_cells",
                       "seed", "samples"});

    RunConfig c;
    if (!j.contains("mode")) throw std::invalid_argument("config: missing 'mode'");
    c.mode = parse_mode(j.at("mode").get<std::string>());

    if (j.contains("m")) c.m = j.at("m").get<double>();
    if (!(c.m > 0.0)) throw std::invalid_argument("config: m must be positive");

    if (j.contains("grid")) {
        const auto& gj = j.at("grid");
        std::vector<double> g;
        if (gj.is_string())
            g = parse_number_list(gj.get<std::string>(), "grid");
        else
            g = gj.get<std::vector<double>>();
        if (g.size() != 3) throw std::invalid_argument("config: grid needs a,b,n");
        const int n = static_cast<int>(std::llround(g[2]));
        if (n != g[2] || n < 3) throw std::invalid_argument("config: grid n must be an integer >= 3");
        c.grid = Grid(g[0], g[1], n);
    }

    if (j.contains("T")) c.T = j.at("T").get<double>();
    if (!(c.T > 0.0)) throw std::invalid_argument("config: T must be positive");

    if (j.contains("epsilon")) c.epsilon = j.at("epsilon").get<double>();
    if (!(c.epsilon > 0.0) || c.epsilon > 1.0)
        throw std::invalid_argument("config: epsilon must lie in (0,1]");

    if (j.contains("schedule")) {
        c.schedule = j.at("schedule").get<std::vector<double>>();
    } else {
        c.schedule = {0.1, 0.05, 0.025, 0.0125};
    }

    if (j.contains("p")) {
        const auto& pj = j.at("p");
        if (pj.is_string())
            c.p_spec = pj.get<std::string>();
        else {
            c.p_values = pj.get<std::vector<double>>();
            c.p_spec = "nodal";
        }
    }
    if (j.contains("u0")) {
        const auto& uj = j.at("u0");
        if (uj.is_string())
            c.u0_spec = uj.get<std::string>();
        else {
            c.u0_values = uj.get<std::vector<double>>();
            c.u0_spec = "nodal";
        }
    }

    c.solver.dt = j.contains("dt") ? j.at("dt").get<double>() : c.T / 200.0;
    if (!(c.solver.dt > 0.0)) throw std::invalid_argument("config: dt must be positive");
    if (j.contains("picard_tol")) c.solver.picard_tol = j.at("picard_tol").get<double>();
    if (!(c.solver.picard_tol > 0.0))
        throw std::invalid_argument("config: picard_tol must be positive");
    if (j.contains("picard_max")) c.solver.picard_max = j.at("picard_max").get<int>();
    if (c.solver.picard_max < 1) throw std::invalid_argument("config: picard_max must be >= 1");
    if (j.contains("delta_g")) c.solver.delta_g = j.at("delta_g").get<double>();
    if (c.solver.delta_g < 0.0) throw std::invalid_argument("config: delta_g must be >= 0");

    if (j.contains("delta_s")) c.delta_s = j.at("delta_s").get<double>();
    if (!(c.delta_s > 0.0)) throw std::invalid_argument("config: delta_s must be positive");
    if (j.contains("dilation_cells")) c.dilation_cells = j.at("dilation_cells").get<int>();
    if (c.dilation_cells < 0) throw std::invalid_argument("config: dilation_cells must be >= 0");
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("samples")) c.samples = j.at("samples").get<long long>();
    if (c.samples < 1) throw std::invalid_argument("config: samples must be >= 1");

    c.p = build_exponent(c.grid, c.p_spec, c.p_values);
    c.u0 = build_u0(c.grid, c.m, c.u0_spec, c.u0_values);
    return c;
}

std::string config_echo(const RunConfig& c) {
    json j;
    j["mode"] = mode_name(c.mode);
    j["m"] = c.m;
    if (c.p_values.empty())
        j["p"] = c.p_spec;
    else
        j["p"] = c.p_values;
    if (c.u0_values.empty())
        j["u0"] = c.u0_spec;
    else
        j["u0"] = c.u0_values;
    j["grid"] = std::vector<double>{c.grid.a, c.grid.b, static_cast<double>(c.grid.n)};
    j["T"] = c.T;
    j["epsilon"] = c.epsilon;
    j["schedule"] = c.schedule;
    j["dt"] = c.solver.dt;
    j["picard_tol"] = c.solver.picard_tol;
    j["picard_max"] = c.solver.picard_max;
    j["delta_g"] = c.solver.delta_g;
    j["delta_s"] = c.delta_s;
    j["dilation_cells"] = c.dilation_cells;
    j["seed"] = c.seed;
    j["samples"] = c.samples;
    return j.dump(2);
}

}  // namespace ddeg
