#pragma once

// Split-step Fourier integration of the 1D/2D Gross-Pitaevskii equation
//   i dpsi/dt = [-1/2 Laplacian + 1/2 omega^2(t) r^2 + g(t)|psi|^2] psi
// in units hbar = m = omega0 = 1.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "frictionless/fft.hpp"
#include "frictionless/kernels.hpp"
#include "frictionless/wavefunction.hpp"

namespace frictionless {

struct ImaginaryTimeOptions {
  std::optional<double> dt;           // in units of 1/max(omega, mu_TF estimate); default 5e-3
  double tolerance = 1e-12;           // |dmu/dtau| / omega in units of energyScale
  double energyScale = 1.0;           // hbar*omega0
  double minTime = 12.0;              // in units of 1/omega; must elapse before convergence
  std::size_t maxSteps = 1'000'000;
  std::optional<Wavefunction> guess;
  kernels::Backend backend = kernels::Backend::Parallel;
};

// Ground state of omega, g by normalized imaginary-time split-step evolution.
// Throws NoConvergence after maxSteps.
StationaryState ground_state_imaginary_time(const Grid& grid, double omega, double g,
                                            const ImaginaryTimeOptions& options = {});

struct PropagationPlan {
  std::function<double(double)> omegaSqOfT;
  std::function<double(double)> gOfT;
  double dt = 0.0;
  double tStart = 0.0;
  double tEnd = 0.0;
  std::size_t recordEvery = 0;        // 0: record only the start and the end
  bool storeSnapshots = false;
  double omega0 = 1.0;                // for the time-step bound
  std::size_t guardEvery = 200;       // steps between overflow / NaN checks
  double overflowFraction = 1e-3;     // of the norm, in the outer 5% band
  kernels::Backend backend = kernels::Backend::Parallel;

  // Throws ConfigError unless 0 < dt <= min(0.05/omega0, 0.1*dx^2) and tEnd > tStart.
  void validate(const Grid& grid) const;
  std::size_t step_count() const;
};

struct Snapshot {
  double t;
  Wavefunction psi;
};

struct PropagationResult {
  Wavefunction psi;
  std::vector<Snapshot> snapshots;
  std::size_t steps = 0;
};

using SnapshotObserver = std::function<void(double t, const Wavefunction& psi)>;

// Second-order Strang splitting (half kinetic, potential+nonlinear, half
// kinetic). The schedules are sampled at step midpoints. Throws GridOverflow
// when the cloud reaches the box edge and NonFinite on NaN/Inf.
PropagationResult propagate(const Wavefunction& psi0, const PropagationPlan& plan,
                            const SnapshotObserver& observer = {});

struct Observables {
  double norm = 0.0;
  double r2 = 0.0;  // <r^2>
  double kinetic = 0.0;
  double potential = 0.0;
  double interaction = 0.0;  // 1/2 g int |psi|^4
  double energy = 0.0;
  double mu = 0.0;
};

Observables observables(const Wavefunction& psi, double omega, double g,
                        kernels::Backend backend = kernels::Backend::Parallel);
// Same with the trap given as omega^2, which may be negative (expulsive).
Observables observables_for_trap(const Wavefunction& psi, double omegaSq, double g,
                                 kernels::Backend backend = kernels::Backend::Parallel);

// Fraction of |psi|^2 with max(|x|,|y|) > 0.95 * extent/2.
double edge_fraction(const Wavefunction& psi);

}  // namespace frictionless
