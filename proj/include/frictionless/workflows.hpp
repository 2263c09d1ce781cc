#pragma once

// The four CLI workflows. Each writes into `out` and echoes the resolved
// configuration as `config.resolved`.

#include <filesystem>
#include <string>
#include <vector>

#include "frictionless/config.hpp"
#include "frictionless/validation.hpp"

namespace frictionless {

std::vector<std::filesystem::path> cmd_design(const RunConfig& cfg, const std::filesystem::path& out);

// Propagates the first configured regime/ansatz/g_tilde (or an omega^2 table
// when `omega_table` is set) and writes snapshots plus an observables trace.
// Snapshots already written survive a failing run.
void cmd_simulate(const RunConfig& cfg, const std::filesystem::path& out);

ValidationReport cmd_validate(const RunConfig& cfg, const std::filesystem::path& out);

struct SweepRow {
  Regime regime;
  Ansatz ansatz;
  double gTilde;
  double fidelityDesigned;
  double fidelityBaseline;
  double minOmegaSq;  // rad^2/s^2
};

// Regimes without a 1D/2D simulation (the 3D ones) are skipped. Row order is
// regime, then ansatz, then g_tilde, as listed in the config.
std::vector<SweepRow> run_sweep(const RunConfig& cfg, unsigned jobs);
std::string sweep_csv(const std::vector<SweepRow>& rows);
std::filesystem::path cmd_sweep(const RunConfig& cfg, const std::filesystem::path& out, unsigned jobs);

// Reads `t_s` and `omega_sq_rad2_s2` columns from a CSV with a header row.
struct OmegaTable {
  std::vector<double> t;
  std::vector<double> omegaSq;
  double operator()(double time) const;  // linear interpolation, held outside the range
};
OmegaTable load_omega_table(const std::filesystem::path& path);

}  // namespace frictionless
