#include "frictionless/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "frictionless/errors.hpp"

namespace frictionless {

void Grid::validate() const {
  if (dimension != 1 && dimension != 2) throw ConfigError("grid dimension must be 1 or 2");
  const auto n = pointsPerAxis;
  if (n < 8 || (n & (n - 1)) != 0) throw ConfigError("grid points per axis must be a power of two >= 8");
  if (!(extent > 0.0) || !std::isfinite(extent)) throw ConfigError("grid extent must be positive");
}

double Grid::cell_volume() const { return std::pow(spacing(), dimension); }

std::vector<double> Grid::axis() const {
  std::vector<double> x(pointsPerAxis);
  const double dx = spacing();
  for (std::size_t i = 0; i < pointsPerAxis; ++i) x[i] = -0.5 * extent + static_cast<double>(i) * dx;
  return x;
}

std::vector<double> Grid::wavenumbers() const {
  const auto n = static_cast<std::ptrdiff_t>(pointsPerAxis);
  const double dk = 2.0 * std::numbers::pi / extent;
  std::vector<double> k(pointsPerAxis);
  for (std::ptrdiff_t i = 0; i < n; ++i) k[i] = dk * static_cast<double>(i < n / 2 ? i : i - n);
  return k;
}

namespace {

std::vector<double> squared_sum(const Grid& g, const std::vector<double>& a) {
  if (g.dimension == 1) {
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * a[i];
    return out;
  }
  const auto n = g.pointsPerAxis;
  std::vector<double> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = a[i] * a[i] + a[j] * a[j];
  return out;
}

}  // namespace

std::vector<double> Grid::radius_squared() const { return squared_sum(*this, axis()); }
std::vector<double> Grid::wavenumber_squared() const { return squared_sum(*this, wavenumbers()); }

GridDiagnostics check_grid_fit(const Grid& grid, double final_scale, double cloud_radius,
                               double safety_factor) {
  GridDiagnostics d;
  d.requiredHalfExtent = safety_factor * std::max(final_scale, 1.0) * cloud_radius;
  d.extentOk = 0.5 * grid.extent >= d.requiredHalfExtent;
  d.pointsPerOscillatorLength = 1.0 / grid.spacing();
  d.resolutionOk = d.pointsPerOscillatorLength >= 8.0;
  return d;
}

Wavefunction::Wavefunction(Grid grid) : grid_(grid), amps_(grid.size()) { grid_.validate(); }

Wavefunction::Wavefunction(Grid grid, std::vector<cplx> amplitudes)
    : grid_(grid), amps_(std::move(amplitudes)) {
  grid_.validate();
  if (amps_.size() != grid_.size()) throw GridMismatch("amplitude count does not match grid size");
}

double Wavefunction::norm_squared(kernels::Kernels k) const {
  return k.sum_abs2(amps_) * grid_.cell_volume();
}

void Wavefunction::normalize(kernels::Kernels k) {
  const double n2 = norm_squared(k);
  if (!(n2 > 0.0) || !std::isfinite(n2)) throw NonFinite("cannot normalize a zero or non-finite field");
  k.scale(amps_, 1.0 / std::sqrt(n2));
}

bool Wavefunction::all_finite() const {
  for (const auto& v : amps_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

Wavefunction gaussian(const Grid& grid, double sigma) {
  Wavefunction psi(grid);
  const auto r2 = grid.radius_squared();
  auto& a = psi.amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::exp(-r2[i] / (4.0 * sigma * sigma));
  psi.normalize();
  return psi;
}

namespace {

// Marginal moments of |psi|^2 along one axis.
std::pair<double, double> axis_moments(const Wavefunction& psi, int axis_index) {
  const auto& g = psi.grid();
  const auto x = g.axis();
  const auto& a = psi.amplitudes();
  const auto n = g.pointsPerAxis;
  double m0 = 0.0, m1 = 0.0, m2 = 0.0;
  for (std::size_t idx = 0; idx < a.size(); ++idx) {
    const std::size_t i = g.dimension == 1 ? idx : (axis_index == 0 ? idx / n : idx % n);
    const double w = std::norm(a[idx]);
    m0 += w;
    m1 += w * x[i];
    m2 += w * x[i] * x[i];
  }
  return {m1 / m0, m2 / m0};
}

}  // namespace

double axis_variance(const Wavefunction& psi) {
  double var = 0.0;
  for (int ax = 0; ax < psi.grid().dimension; ++ax) {
    const auto [mean, second] = axis_moments(psi, ax);
    var += second - mean * mean;
  }
  return var / psi.grid().dimension;
}

double rms_radius(const Wavefunction& psi) {
  const auto r2 = psi.grid().radius_squared();
  const kernels::Kernels k;
  return std::sqrt(k.sum_weighted_abs2(psi.amplitudes(), r2) / k.sum_abs2(psi.amplitudes()));
}

}  // namespace frictionless
