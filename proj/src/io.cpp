#include "ddeg/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ddeg {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

}  // namespace

void write_snapshots_csv(const Trajectory& traj, const std::string& path) {
    std::ostringstream ss;
    ss << "time,node_index,x,u,v\n";
    for (size_t t = 0; t < traj.times.size(); ++t)
        for (int i = 0; i < traj.grid.n; ++i)
            ss << fmt17(traj.times[t]) << ',' << i << ',' << fmt17(traj.grid.x(i)) << ','
               << fmt17(traj.u[t][i]) << ',' << fmt17(traj.v[t][i]) << '\n';
    write_text_file(path, ss.str());
}

void write_diagnostics_csv(const Trajectory& traj, const std::string& path) {
    std::ostringstream ss;
    ss << "time,energy,dissipation,min_u,max_u,picard_iters\n";
    for (size_t t = 0; t < traj.times.size(); ++t) {
        const auto& d = traj.diagnostics[t];
        ss << fmt17(traj.times[t]) << ',' << fmt17(d.energy) << ',' << fmt17(d.dissipation)
           << ',' << fmt17(d.min_u) << ',' << fmt17(d.max_u) << ',' << d.picard_iters << '\n';
    }
    write_text_file(path, ss.str());
}

void write_text_file(const std::string& path, const std::string& content) {
    auto out = open_out(path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace ddeg
