#pragma once

#include <filesystem>
#include <string>

#include "frictionless/trajectory_design.hpp"
#include "frictionless/wavefunction.hpp"

namespace frictionless {

// 17 significant digits, classic locale.
std::string format_double(double v);

// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

// Header `t_s,b,bdot,bddot,omega_sq_rad2_s2,tau_s,g_over_g0`, one row per sample.
std::string trajectory_csv(const ScalingTrajectory& traj);

// Header `t_s,x,re_psi,im_psi,density` (1D) or `t_s,x,y,re_psi,im_psi,density`
// (2D); lengths in oscillator lengths of the initial trap.
std::string snapshot_csv(double t_seconds, const Wavefunction& psi);

}  // namespace frictionless
