#pragma once

// Flat key=value run configuration. Frequencies are linear (Hz) and converted
// to angular frequency (2*pi*f); `#` starts a comment; unknown or repeated
// keys are rejected.
//
//   omega0_hz = 250
//   omegaf_hz = 2.5
//   tf_ms = 6
//   regimes = OneD_TF, TwoD, ThreeD_TF
//   ansaetze = Polynomial5, ExpPolynomial5
//   g_tilde = 0, 10

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frictionless/kernels.hpp"
#include "frictionless/trajectory_design.hpp"
#include "frictionless/validation.hpp"

namespace frictionless {

struct RunConfig {
  double omega0Hz = 250.0;
  double omegaFHz = 2.5;
  double tFSeconds = 6e-3;
  std::vector<Regime> regimes{Regime::TwoD};
  std::vector<Ansatz> ansaetze{Ansatz::Polynomial5};
  std::size_t samples = 1000;
  std::vector<double> gTilde{0.0};

  std::size_t points1d = 1024;
  double extent1d = 128.0;  // oscillator lengths
  std::size_t points2d = 256;
  double extent2d = 64.0;

  std::size_t steps = 20000;
  std::size_t records = 50;
  double holdPeriods = 0.0;
  std::size_t holdRecords = 400;

  std::optional<double> imagDt;  // in 1/max(omega, mu_TF) of the trap being solved
  double imagTolerance = 1e-12;
  std::size_t imagMaxSteps = 1'000'000;

  std::string omegaTable;  // optional CSV t_s,omega_sq_rad2_s2 for `simulate`
  std::string outDir;
  std::uint64_t seed = 0;
  kernels::Backend backend = kernels::Backend::Parallel;

  DesignSpec design_spec(Regime regime, Ansatz ansatz) const;
  Grid grid(int dimension) const;
  SimulationSettings settings(int dimension) const;

  // Fully resolved configuration in the input syntax (every key present).
  std::string to_text() const;
};

// Throws ConfigError with a one-line diagnostic.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace frictionless
