#pragma once

// Closed-form propagating mode of the GPE along a designed scaling trajectory:
//   psi(r,t) = b^{-d/2} exp(i bdot r^2 / (2b)) exp(-i mu tau(t)) Psi(r/b, 0)
// (hbar = m = 1). This is the prediction the PDE solver is checked against.

#include "frictionless/trajectory_design.hpp"
#include "frictionless/wavefunction.hpp"

namespace frictionless {

// Evaluates psi(r,t); Psi(r/b,0) is resampled onto the lab grid by band-limited
// trigonometric interpolation. The trajectory must be expressed in the same
// units as the state: its omega0 must equal state.omega. Throws GridUnderflow if r/b leaves the grid.
Wavefunction propagating_mode(const StationaryState& state, const ScalingTrajectory& traj, double t);

// Band-limited interpolant of psi evaluated at the lab points x / scale.
// Throws GridUnderflow if any x / scale falls outside [-extent/2, extent/2].
Wavefunction dilate(const Wavefunction& psi, double scale);

// mu = int psi* [-1/2 Laplacian + 1/2 omega^2 r^2 + g|psi|^2] psi, kinetic term spectral.
double chemical_potential(const Wavefunction& psi, double omega, double g);

struct TfProfile {
  Wavefunction psi;
  double mu = 0.0;
  double radius = 0.0;  // sqrt(2 mu) / omega
};

// |psi|^2 = max((mu - omega^2 r^2 / 2) / g, 0), mu fixed by unit norm on the grid
// (bisection to relative 1e-12). Throws InvalidCoupling unless g > 0.
TfProfile tf_profile(const Grid& grid, double omega, double g);

}  // namespace frictionless
