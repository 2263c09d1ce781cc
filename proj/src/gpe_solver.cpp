#include "frictionless/gpe_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "frictionless/errors.hpp"

namespace frictionless {

namespace {

using kernels::Kernels;

// Thomas-Fermi chemical potential for unit norm, used only to size defaults.
double tf_mu_estimate(int dimension, double omega, double g) {
  if (g <= 0.0) return 0.0;
  if (dimension == 1) return std::pow(3.0 * g * omega / (4.0 * std::numbers::sqrt2), 2.0 / 3.0);
  return omega * std::sqrt(g / std::numbers::pi);
}

// Grid-bound operators and FFT workspace shared by the real- and
// imaginary-time drivers.
class SplitStep {
 public:
  SplitStep(const Grid& grid, kernels::Backend backend)
      : grid_(grid),
        fft_(grid.dimension, grid.pointsPerAxis),
        r2_(grid.radius_squared()),
        k2_(grid.wavenumber_squared()),
        k_{backend},
        inv_n_(1.0 / static_cast<double>(grid.size())) {}

  const std::vector<double>& r2() const { return r2_; }
  const Kernels& kernels() const { return k_; }

  // exp(-i k^2/2 * dt) / N for real time, exp(-k^2/2 * dt) / N for imaginary time.
  std::vector<cplx> kinetic_factors(double dt, bool imaginary) const {
    std::vector<cplx> f(k2_.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double a = 0.5 * k2_[i] * dt;
      f[i] = imaginary ? cplx(std::exp(-a) * inv_n_, 0.0)
                       : cplx(std::cos(a) * inv_n_, -std::sin(a) * inv_n_);
    }
    return f;
  }

  void kinetic(std::vector<cplx>& psi, const std::vector<cplx>& factors) const {
    fft_.forward(psi);
    k_.multiply(psi, factors);
    fft_.inverse(psi);
  }

  // Kinetic energy int psi* (-1/2 Laplacian) psi via Parseval.
  double kinetic_energy(const std::vector<cplx>& psi) const {
    std::vector<cplx> spec(psi);
    fft_.forward(spec);
    return 0.5 * k_.sum_weighted_abs2(spec, k2_) * inv_n_ * grid_.cell_volume();
  }

 private:
  Grid grid_;
  FftPlan fft_;
  std::vector<double> r2_;
  std::vector<double> k2_;
  Kernels k_;
  double inv_n_;
};

std::vector<double> edge_mask(const Grid& grid) {
  const auto x = grid.axis();
  const double limit = 0.95 * 0.5 * grid.extent;
  const auto n = grid.pointsPerAxis;
  std::vector<double> mask(grid.size(), 0.0);
  for (std::size_t idx = 0; idx < mask.size(); ++idx) {
    const double ax = std::abs(x[grid.dimension == 1 ? idx : idx / n]);
    const double ay = grid.dimension == 1 ? 0.0 : std::abs(x[idx % n]);
    mask[idx] = std::max(ax, ay) > limit ? 1.0 : 0.0;
  }
  return mask;
}

}  // namespace

StationaryState ground_state_imaginary_time(const Grid& grid, double omega, double g,
                                            const ImaginaryTimeOptions& options) {
  grid.validate();
  if (!(omega > 0.0)) throw ConfigError("ground state requires omega > 0");
  if (g < 0.0) throw InvalidCoupling("ground state requires g >= 0");

  const double mu_tf = tf_mu_estimate(grid.dimension, omega, g);
  const double dt = options.dt.value_or(5e-3) / std::max(omega, mu_tf);
  if (!(dt > 0.0)) throw ConfigError("imaginary-time step must be positive");

  Wavefunction psi;
  if (options.guess) {
    psi = *options.guess;
    if (!(psi.grid() == grid)) throw GridMismatch("initial guess lives on a different grid");
  } else {
    // Harmonic width, widened to the Thomas-Fermi second moment when larger.
    double var = 0.5 / omega;
    if (mu_tf > 0.0) {
      const double r2_tf = 2.0 * mu_tf / (omega * omega);
      var = std::max(var, grid.dimension == 1 ? r2_tf / 5.0 : r2_tf / 6.0);
    }
    psi = gaussian(grid, std::sqrt(var));
  }

  SplitStep ops(grid, options.backend);
  const auto& k = ops.kernels();
  const auto half_kick = ops.kinetic_factors(0.5 * dt, true);
  const double half_w2 = 0.5 * omega * omega;
  const double dv = grid.cell_volume();
  auto& a = psi.amplitudes();
  psi.normalize(k);

  const auto min_steps = static_cast<std::size_t>(std::ceil(options.minTime / (omega * dt)));
  double mu_prev = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t step = 1; step <= options.maxSteps; ++step) {
    // Normalized gradient flow psi' = -(H - mu) psi. The nonlinear factor must
    // see a unit-norm density throughout, otherwise the norm lost within the
    // step rescales g and the fixed point is only first order in dt.
    ops.kinetic(a, half_kick);
    psi.normalize(k);
    const double shift = (half_w2 * k.sum_weighted_abs2(a, ops.r2()) + g * k.sum_abs4(a)) * dv;
    k.potential_decay(a, ops.r2(), half_w2, g, dt, shift);
    psi.normalize(k);
    ops.kinetic(a, half_kick);
    psi.normalize(k);

    const double mu = ops.kinetic_energy(a) + half_w2 * k.sum_weighted_abs2(a, ops.r2()) * dv +
                      g * k.sum_abs4(a) * dv;
    if (!std::isfinite(mu)) throw NonFinite("imaginary-time evolution produced a non-finite state");
    // Rate of change per unit imaginary time, so the test does not depend on dt.
    if (step >= min_steps && std::abs(mu - mu_prev) < options.tolerance * options.energyScale * omega * dt)
      return StationaryState{psi, mu, g, omega, grid.dimension};
    mu_prev = mu;
  }
  std::ostringstream msg;
  msg << "imaginary-time ground state did not converge in " << options.maxSteps
      << " steps (omega=" << omega << ", g=" << g << ", dt=" << dt << ")";
  throw NoConvergence(msg.str());
}

void PropagationPlan::validate(const Grid& grid) const {
  if (!omegaSqOfT || !gOfT) throw ConfigError("propagation plan needs omega^2(t) and g(t) schedules");
  if (!(tEnd > tStart)) throw ConfigError("propagation plan needs tEnd > tStart");
  const double dx = grid.spacing();
  const double bound = std::min(0.05 / omega0, 0.1 * dx * dx);
  if (!(dt > 0.0) || dt > bound * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "time step " << dt << " outside (0, " << bound << "]";
    throw ConfigError(msg.str());
  }
}

std::size_t PropagationPlan::step_count() const {
  return static_cast<std::size_t>(std::max(1.0, std::ceil((tEnd - tStart) / dt - 1e-9)));
}

PropagationResult propagate(const Wavefunction& psi0, const PropagationPlan& plan,
                            const SnapshotObserver& observer) {
  const Grid& grid = psi0.grid();
  plan.validate(grid);

  const std::size_t steps = plan.step_count();
  const double h = (plan.tEnd - plan.tStart) / static_cast<double>(steps);

  SplitStep ops(grid, plan.backend);
  const auto& k = ops.kernels();
  const auto half_kick = ops.kinetic_factors(0.5 * h, false);
  const auto full_kick = ops.kinetic_factors(h, false);
  const auto mask = edge_mask(grid);
  const double dv = grid.cell_volume();

  PropagationResult result{psi0, {}, steps};
  auto& psi = result.psi;
  auto& a = psi.amplitudes();

  auto record = [&](double t) {
    if (observer) observer(t, psi);
    if (plan.storeSnapshots) result.snapshots.push_back({t, psi});
  };
  auto guard = [&](double t) {
    const double total = k.sum_abs2(a) * dv;
    if (!std::isfinite(total)) {
      std::ostringstream msg;
      msg << "non-finite wavefunction at t=" << t;
      throw NonFinite(msg.str());
    }
    const double edge = k.sum_weighted_abs2(a, mask) * dv;
    if (edge > plan.overflowFraction * total) {
      std::ostringstream msg;
      msg << "cloud reached the grid edge at t=" << t << ": " << edge / total
          << " of the norm lies in the outer 5% band";
      throw GridOverflow(msg.str());
    }
  };

  record(plan.tStart);
  ops.kinetic(a, half_kick);
  for (std::size_t s = 0; s < steps; ++s) {
    const double t_mid = plan.tStart + (static_cast<double>(s) + 0.5) * h;
    k.potential_phase(a, ops.r2(), 0.5 * plan.omegaSqOfT(t_mid), plan.gOfT(t_mid), h);

    const std::size_t done = s + 1;
    const bool last = done == steps;
    const bool rec = last || (plan.recordEvery > 0 && done % plan.recordEvery == 0);
    const bool chk = rec || (plan.guardEvery > 0 && done % plan.guardEvery == 0);
    if (!chk) {
      ops.kinetic(a, full_kick);
      continue;
    }
    ops.kinetic(a, half_kick);
    const double t = last ? plan.tEnd : plan.tStart + static_cast<double>(done) * h;
    guard(t);
    if (rec) record(t);
    if (!last) ops.kinetic(a, half_kick);
  }
  return result;
}

Observables observables(const Wavefunction& psi, double omega, double g, kernels::Backend backend) {
  return observables_for_trap(psi, omega * omega, g, backend);
}

Observables observables_for_trap(const Wavefunction& psi, double omegaSq, double g,
                                 kernels::Backend backend) {
  SplitStep ops(psi.grid(), backend);
  const auto& k = ops.kernels();
  const auto& a = psi.amplitudes();
  const double dv = psi.grid().cell_volume();

  Observables o;
  o.norm = k.sum_abs2(a) * dv;
  o.r2 = k.sum_weighted_abs2(a, ops.r2()) * dv;
  o.kinetic = ops.kinetic_energy(a);
  o.potential = 0.5 * omegaSq * o.r2;
  o.interaction = 0.5 * g * k.sum_abs4(a) * dv;
  o.energy = o.kinetic + o.potential + o.interaction;
  o.mu = (o.kinetic + o.potential + 2.0 * o.interaction) / o.norm;
  return o;
}

double edge_fraction(const Wavefunction& psi) {
  const Kernels k;
  const auto& a = psi.amplitudes();
  return k.sum_weighted_abs2(a, edge_mask(psi.grid())) / k.sum_abs2(a);
}

}  // namespace frictionless
