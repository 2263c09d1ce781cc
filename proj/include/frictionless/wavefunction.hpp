#pragma once

// Uniform Cartesian grids and complex fields on them. Lengths are in units of
// the initial-trap oscillator length sqrt(hbar/(m omega0)).

#include <complex>
#include <cstddef>
#include <vector>

#include "frictionless/kernels.hpp"

namespace frictionless {

using cplx = std::complex<double>;

struct Grid {
  int dimension = 1;            // 1 or 2
  std::size_t pointsPerAxis = 0;  // power of two
  double extent = 0.0;          // per axis, symmetric about 0

  // Throws ConfigError unless dimension is 1 or 2, points is a power of two >= 8,
  // and extent is positive.
  void validate() const;

  double spacing() const { return extent / static_cast<double>(pointsPerAxis); }
  std::size_t size() const { return dimension == 1 ? pointsPerAxis : pointsPerAxis * pointsPerAxis; }
  // Quadrature weight dx^d.
  double cell_volume() const;
  // Axis coordinates x_i = -extent/2 + i*dx.
  std::vector<double> axis() const;
  // Angular wavenumbers in FFT order.
  std::vector<double> wavenumbers() const;
  // |r|^2 and |k|^2 for every grid point (row-major, x index slowest).
  std::vector<double> radius_squared() const;
  std::vector<double> wavenumber_squared() const;

  bool operator==(const Grid&) const = default;
};

struct GridDiagnostics {
  bool extentOk = true;      // extent/2 >= safety * b_f * cloud radius
  bool resolutionOk = true;  // >= 8 points per oscillator length
  double requiredHalfExtent = 0.0;
  double pointsPerOscillatorLength = 0.0;
};

GridDiagnostics check_grid_fit(const Grid& grid, double final_scale, double cloud_radius,
                               double safety_factor = 4.0);

class Wavefunction {
 public:
  Wavefunction() = default;
  explicit Wavefunction(Grid grid);
  Wavefunction(Grid grid, std::vector<cplx> amplitudes);

  const Grid& grid() const { return grid_; }
  std::vector<cplx>& amplitudes() { return amps_; }
  const std::vector<cplx>& amplitudes() const { return amps_; }

  // Trapezoid quadrature of |psi|^2 (periodic uniform grid).
  double norm_squared(kernels::Kernels k = {}) const;
  void normalize(kernels::Kernels k = {});
  bool all_finite() const;

 private:
  Grid grid_;
  std::vector<cplx> amps_;
};

// Ground state of a trap together with its chemical potential.
struct StationaryState {
  Wavefunction psi0;
  double mu = 0.0;
  double g0 = 0.0;
  double omega = 1.0;
  int dimension = 1;
};

// Returns a normalized isotropic Gaussian exp(-r^2/(4 sigma^2)) with per-axis
// standard deviation sigma of |psi|^2.
Wavefunction gaussian(const Grid& grid, double sigma);

// Per-axis variance <x^2> of |psi|^2 (averaged over axes in 2D) and rms radius sqrt(<r^2>).
double axis_variance(const Wavefunction& psi);
double rms_radius(const Wavefunction& psi);

}  // namespace frictionless
