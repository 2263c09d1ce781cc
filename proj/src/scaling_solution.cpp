#include "frictionless/scaling_solution.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>

#include "frictionless/errors.hpp"
#include "frictionless/gpe_solver.hpp"

namespace frictionless {

namespace {

// Periodic sinc for an even number of points with the Nyquist term split
// symmetrically: D(u) = sin(N pi u / L) / (N tan(pi u / L)).
double dirichlet_kernel(double u, std::size_t n, double extent) {
  const double theta = std::numbers::pi * u / extent;
  const double nn = static_cast<double>(n);
  const double s = std::sin(theta);
  if (std::abs(s) < 1e-13) return std::cos(nn * theta);
  return std::sin(nn * theta) * std::cos(theta) / (nn * s);
}

void check_inside(const Grid& grid, double scale) {
  const double half = 0.5 * grid.extent;
  if (half / scale > half * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "dilation by " << scale << " samples outside the stored grid";
    throw GridUnderflow(msg.str());
  }
}

}  // namespace

Wavefunction dilate(const Wavefunction& psi, double scale) {
  const Grid& grid = psi.grid();
  if (!(scale > 0.0)) throw ConfigError("dilation scale must be positive");
  check_inside(grid, scale);

  const auto n = grid.pointsPerAxis;
  const auto x = grid.axis();
  const auto& in = psi.amplitudes();
  Wavefunction out(grid);
  auto& dst = out.amplitudes();
  const auto ni = static_cast<std::int64_t>(n);

  if (grid.dimension == 1) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < ni; ++i) {
      const double p = x[i] / scale;
      cplx acc{};
      for (std::size_t m = 0; m < n; ++m) acc += dirichlet_kernel(p - x[m], n, grid.extent) * in[m];
      dst[i] = acc;
    }
    return out;
  }

  std::vector<double> w(n * n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < ni; ++i)
    for (std::size_t m = 0; m < n; ++m) w[i * n + m] = dirichlet_kernel(x[i] / scale - x[m], n, grid.extent);

  // Interpolate along y for every row, then along x for every column.
  std::vector<cplx> tmp(n * n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < ni; ++i)
    for (std::size_t jp = 0; jp < n; ++jp) {
      cplx acc{};
      for (std::size_t j = 0; j < n; ++j) acc += w[jp * n + j] * in[i * n + j];
      tmp[i * n + jp] = acc;
    }
#pragma omp parallel for schedule(static)
  for (std::int64_t ip = 0; ip < ni; ++ip)
    for (std::size_t jp = 0; jp < n; ++jp) {
      cplx acc{};
      for (std::size_t i = 0; i < n; ++i) acc += w[ip * n + i] * tmp[i * n + jp];
      dst[ip * n + jp] = acc;
    }
  return out;
}

Wavefunction propagating_mode(const StationaryState& state, const ScalingTrajectory& traj, double t) {
  if (dimension(traj.spec().regime) != state.dimension)
    throw ConfigError("trajectory regime does not match the state dimension");
  if (std::abs(traj.spec().omega0 - state.omega) > 1e-12 * state.omega)
    throw ConfigError("trajectory omega0 differs from the trap of the initial state (units mismatch?)");
  const double b = traj.b(t);
  const double bdot = traj.bdot(t);
  const double tau = scaled_time(traj, t);

  Wavefunction out = dilate(state.psi0, b);
  const auto r2 = out.grid().radius_squared();
  const double amp = std::pow(b, -0.5 * state.dimension);
  const double global = -state.mu * tau;
  auto& a = out.amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= amp * std::polar(1.0, global + bdot * r2[i] / (2.0 * b));
  return out;
}

double chemical_potential(const Wavefunction& psi, double omega, double g) {
  return observables(psi, omega, g).mu;
}

TfProfile tf_profile(const Grid& grid, double omega, double g) {
  grid.validate();
  if (!(g > 0.0)) throw InvalidCoupling("Thomas-Fermi profile requires g > 0");
  if (!(omega > 0.0)) throw ConfigError("Thomas-Fermi profile requires omega > 0");

  const auto r2 = grid.radius_squared();
  const double dv = grid.cell_volume();
  const double half_w2 = 0.5 * omega * omega;
  auto norm_at = [&](double mu) {
    double s = 0.0;
    for (double v : r2) s += std::max(mu - half_w2 * v, 0.0);
    return s * dv / g;
  };

  double lo = 0.0, hi = 1.0;
  while (norm_at(hi) < 1.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) throw NumericalError("Thomas-Fermi normalization bracket failed");
  }
  while (hi - lo > 1e-12 * hi) {
    const double mid = 0.5 * (lo + hi);
    (norm_at(mid) < 1.0 ? lo : hi) = mid;
  }
  const double mu = 0.5 * (lo + hi);

  Wavefunction psi(grid);
  auto& a = psi.amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::sqrt(std::max(mu - half_w2 * r2[i], 0.0) / g);
  psi.normalize();
  return {std::move(psi), mu, std::sqrt(2.0 * mu) / omega};
}

}  // namespace frictionless
