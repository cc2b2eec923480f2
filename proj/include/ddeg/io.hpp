// Deterministic output files: snapshot/diagnostic CSVs and JSON reports.
#pragma once

#include <string>

#include "ddeg/continuation.hpp"
#include "ddeg/solver.hpp"

namespace ddeg {

inline constexpr const char* kToolVersion = "0.1.0";

// 17 significant digits, locale-independent.
std::string fmt17(double v);

// Columns: time,node_index,x,u,v — time-major, node-minor.
void write_snapshots_csv(const Trajectory& traj, const std::string& path);

// Columns: time,energy,dissipation,min_u,max_u,picard_iters.
void write_diagnostics_csv(const Trajectory& traj, const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace ddeg
