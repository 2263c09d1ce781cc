#pragma once

// Design -> simulate -> compare. Scores a designed ramp against the
// independently computed ground state of the final trap and against the
// closed-form propagating mode, with a linear-in-omega ramp as baseline.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "frictionless/gpe_solver.hpp"
#include "frictionless/scaling_solution.hpp"
#include "frictionless/trajectory_design.hpp"

namespace frictionless {

// |<a|b>|^2 / (<a|a><b|b>); throws GridMismatch if the grids differ.
double fidelity(const Wavefunction& a, const Wavefunction& b);
// ||a - b|| (raw) and min over theta of ||a - exp(i theta) b||.
double l2_distance(const Wavefunction& a, const Wavefunction& b);
double l2_distance_phase_aligned(const Wavefunction& a, const Wavefunction& b);
// int | |a|^2 - |b|^2 | dV
double density_l1_distance(const Wavefunction& a, const Wavefunction& b);

// Re-expresses a spec in simulator units: omega0 -> 1, time in 1/omega0.
DesignSpec to_dimensionless(const DesignSpec& spec);

struct SimulationSettings {
  Grid grid;
  std::size_t steps = 20000;    // real-time steps over [0, tF]
  std::size_t records = 50;     // recorded times during the ramp
  double holdPeriods = 0.0;     // final-trap periods to hold after tF (0: skip)
  std::size_t holdRecords = 400;
  ImaginaryTimeOptions groundState;
  kernels::Backend backend = kernels::Backend::Parallel;
  bool runBaseline = true;
};

struct HoldResult {
  double holdTime = 0.0;            // in 1/omega0
  double densityChangeMax = 0.0;    // max over the hold of int ||psi(t)|^2 - |psi(tF)|^2|
  double densityChangeEnd = 0.0;    // same at the end of the hold
  double measuredMu = 0.0;          // phase rotation rate of <psi(tF)|psi(t)>
  double expectedMu = 0.0;          // mu / b_f^(nu-2)
  double relativeError = 0.0;
};

struct ValidationReport {
  DesignSpec spec;  // as given (SI at the CLI boundary)
  double gTilde = 0.0;
  SimulationSettings settings;

  double fidelityToTarget = 0.0;
  double fidelityToScalingLaw = 0.0;
  double baselineFidelity = 0.0;
  double l2ToScalingLaw = 0.0;
  double l2ToScalingLawAligned = 0.0;
  double widthTrackingError = 0.0;  // max |sigma(t)/(b(t) sigma(0)) - 1| at recorded times

  double ermakovResidualMax = 0.0;  // in units of omega0^2
  std::array<double, 6> boundaryResiduals{};
  std::vector<Interval> expulsiveIntervals;  // in the spec's time unit
  double minOmegaSq = 0.0;                   // in the spec's units

  double finalScale = 0.0;
  double muInitial = 0.0;  // units hbar*omega0
  double muTarget = 0.0;
  double peakInteraction = 0.0;  // max g|psi0|^2 / (hbar omega0)
  double initialRadius = 0.0;    // rms radius, oscillator lengths
  GridDiagnostics gridDiagnostics;

  std::optional<HoldResult> hold;
  std::optional<HoldResult> baselineHold;
  double wallClockSeconds = 0.0;

  // States at tF (not serialized into the text report).
  StationaryState initial;
  Wavefunction designedFinal;
  Wavefunction baselineFinal;
  Wavefunction target;
  Wavefunction scalingPrediction;

  // key: value lines.
  std::string to_text() const;
};

// Max over n pseudo-random times of |b'' + omega^2 b - omega0^2/b^(nu-1)| / omega0^2.
double ermakov_residual_max(const ScalingTrajectory& traj, std::size_t n = 1000,
                            unsigned long long seed = 0);
// Relative residuals of the six boundary conditions.
std::array<double, 6> boundary_residuals(const ScalingTrajectory& traj);

ValidationReport run_frictionless_check(const DesignSpec& spec, double gTilde,
                                        const SimulationSettings& settings);

// Holds omegaF and g after tF and measures how stationary psi stays.
HoldResult hold_and_verify_stationarity(const Wavefunction& psiAtTf, double omegaF, double g,
                                        double expectedMu, double holdTime,
                                        const SimulationSettings& settings);

// Runs the hold phase for the designed (and baseline, when present) final
// states of a completed report and stores the results in it.
void hold_report(ValidationReport& report, double holdTime);

}  // namespace frictionless
