#include "frictionless/validation.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "frictionless/errors.hpp"

namespace frictionless {

namespace {

void require_same_grid(const Wavefunction& a, const Wavefunction& b) {
  if (!(a.grid() == b.grid())) throw GridMismatch("wavefunctions live on different grids");
}

double max_density(const Wavefunction& psi) {
  double m = 0.0;
  for (const auto& v : psi.amplitudes()) m = std::max(m, std::norm(v));
  return m;
}

}  // namespace

double fidelity(const Wavefunction& a, const Wavefunction& b) {
  require_same_grid(a, b);
  const kernels::Kernels k;
  const double na = k.sum_abs2(a.amplitudes());
  const double nb = k.sum_abs2(b.amplitudes());
  const double f = std::norm(k.inner(a.amplitudes(), b.amplitudes())) / (na * nb);
  return std::clamp(f, 0.0, 1.0);
}

double l2_distance(const Wavefunction& a, const Wavefunction& b) {
  require_same_grid(a, b);
  double s = 0.0;
  const auto& x = a.amplitudes();
  const auto& y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) s += std::norm(x[i] - y[i]);
  return std::sqrt(s * a.grid().cell_volume());
}

double l2_distance_phase_aligned(const Wavefunction& a, const Wavefunction& b) {
  require_same_grid(a, b);
  const kernels::Kernels k;
  const double dv = a.grid().cell_volume();
  const double na = k.sum_abs2(a.amplitudes()) * dv;
  const double nb = k.sum_abs2(b.amplitudes()) * dv;
  const double overlap = std::abs(k.inner(a.amplitudes(), b.amplitudes())) * dv;
  return std::sqrt(std::max(na + nb - 2.0 * overlap, 0.0));
}

double density_l1_distance(const Wavefunction& a, const Wavefunction& b) {
  require_same_grid(a, b);
  double s = 0.0;
  const auto& x = a.amplitudes();
  const auto& y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) s += std::abs(std::norm(x[i]) - std::norm(y[i]));
  return s * a.grid().cell_volume();
}

DesignSpec to_dimensionless(const DesignSpec& spec) {
  spec.validate();
  DesignSpec out = spec;
  out.omega0 = 1.0;
  out.omegaF = spec.omegaF / spec.omega0;
  out.tF = spec.tF * spec.omega0;
  return out;
}

double ermakov_residual_max(const ScalingTrajectory& traj, std::size_t n, unsigned long long seed) {
  const auto& spec = traj.spec();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, spec.tF);
  const double w02 = spec.omega0 * spec.omega0;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = dist(rng);
    const double b = traj.b(t);
    const double r = traj.bddot(t) + omega_squared(traj, t) * b - w02 / std::pow(b, spec.nu() - 1);
    worst = std::max(worst, std::abs(r) / w02);
  }
  return worst;
}

std::array<double, 6> boundary_residuals(const ScalingTrajectory& traj) {
  const auto& spec = traj.spec();
  const double tF = spec.tF;
  const double bf = spec.final_scale();
  return {std::abs(traj.b(0.0) - 1.0),
          std::abs(traj.bdot(0.0)) * tF,
          std::abs(traj.bddot(0.0)) * tF * tF,
          std::abs(traj.b(tF) - bf) / bf,
          std::abs(traj.bdot(tF)) * tF / bf,
          std::abs(traj.bddot(tF)) * tF * tF / bf};
}

ValidationReport run_frictionless_check(const DesignSpec& spec, double gTilde,
                                        const SimulationSettings& settings) {
  const auto started = std::chrono::steady_clock::now();
  const Grid& grid = settings.grid;
  grid.validate();
  if (gTilde < 0.0) throw InvalidCoupling("g_tilde must be non-negative");
  if (dimension(spec.regime) != grid.dimension) {
    std::ostringstream msg;
    msg << "regime " << to_string(spec.regime) << " cannot be simulated on a " << grid.dimension
        << "D grid";
    throw ConfigError(msg.str());
  }
  if (settings.steps == 0) throw ConfigError("steps must be positive");

  ValidationReport report;
  report.spec = spec;
  report.gTilde = gTilde;
  report.settings = settings;

  // Design-side diagnostics in the caller's units.
  const auto physical = design_trajectory(spec);
  const auto ft = sample_frequency_trajectory(physical);
  report.ermakovResidualMax = ermakov_residual_max(physical);
  report.boundaryResiduals = boundary_residuals(physical);
  report.expulsiveIntervals = expulsive_intervals(ft);
  report.minOmegaSq = *std::min_element(ft.omegaSq.begin(), ft.omegaSq.end());
  report.finalScale = spec.final_scale();

  const DesignSpec ds = to_dimensionless(spec);
  const auto traj = design_trajectory(ds);
  const auto g_of_t = coupling_schedule(traj, gTilde);
  const double tF = ds.tF;
  const double omegaF = ds.omegaF;

  auto gs_options = settings.groundState;
  gs_options.backend = settings.backend;
  report.initial = ground_state_imaginary_time(grid, 1.0, g_of_t(0.0), gs_options);
  report.muInitial = report.initial.mu;
  report.peakInteraction = gTilde * max_density(report.initial.psi0);
  report.initialRadius = rms_radius(report.initial.psi0);
  report.gridDiagnostics = check_grid_fit(grid, report.finalScale, report.initialRadius);

  PropagationPlan plan;
  plan.omegaSqOfT = [&traj](double t) { return held_omega_squared(traj, t); };
  plan.gOfT = [g_of_t](double t) { return g_of_t(t); };
  plan.dt = tF / static_cast<double>(settings.steps);
  plan.tEnd = tF;
  plan.recordEvery = settings.records > 0 ? std::max<std::size_t>(1, settings.steps / settings.records) : 0;
  plan.backend = settings.backend;

  const double sigma0 = std::sqrt(axis_variance(report.initial.psi0));
  double width_err = 0.0;
  auto track_width = [&](double t, const Wavefunction& psi) {
    const double ratio = std::sqrt(axis_variance(psi)) / (sigma0 * traj.b(std::min(t, tF)));
    width_err = std::max(width_err, std::abs(ratio - 1.0));
  };
  report.designedFinal = propagate(report.initial.psi0, plan, track_width).psi;
  report.widthTrackingError = width_err;

  // Target: independent ground state of the final trap with the final coupling.
  auto target_options = gs_options;
  target_options.guess.reset();
  const auto target = ground_state_imaginary_time(grid, omegaF, g_of_t(tF), target_options);
  report.target = target.psi0;
  report.muTarget = target.mu;
  report.fidelityToTarget = fidelity(report.designedFinal, report.target);

  report.scalingPrediction = propagating_mode(report.initial, traj, tF);
  report.fidelityToScalingLaw = fidelity(report.designedFinal, report.scalingPrediction);
  report.l2ToScalingLaw = l2_distance(report.designedFinal, report.scalingPrediction);
  report.l2ToScalingLawAligned = l2_distance_phase_aligned(report.designedFinal, report.scalingPrediction);

  if (settings.runBaseline) {
    PropagationPlan base = plan;
    base.recordEvery = 0;
    base.omegaSqOfT = [tF, omegaF](double t) {
      const double w = t >= tF ? omegaF : 1.0 + (omegaF - 1.0) * std::max(t, 0.0) / tF;
      return w * w;
    };
    try {
      report.baselineFinal = propagate(report.initial.psi0, base).psi;
    } catch (const NumericalError& e) {
      throw NumericalError(std::string("linear-ramp baseline run failed: ") + e.what());
    }
    report.baselineFidelity = fidelity(report.baselineFinal, report.target);
  }

  if (settings.holdPeriods > 0.0) hold_report(report, settings.holdPeriods * 2.0 * std::numbers::pi / omegaF);

  report.wallClockSeconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

HoldResult hold_and_verify_stationarity(const Wavefunction& psiAtTf, double omegaF, double g,
                                        double expectedMu, double holdTime,
                                        const SimulationSettings& settings) {
  if (!(holdTime > 0.0)) throw ConfigError("hold time must be positive");
  const double dx = psiAtTf.grid().spacing();

  PropagationPlan plan;
  plan.omegaSqOfT = [omegaF](double) { return omegaF * omegaF; };
  plan.gOfT = [g](double) { return g; };
  plan.dt = std::min(0.05, 0.1 * dx * dx);
  plan.tEnd = holdTime;
  const std::size_t records = std::max<std::size_t>(settings.holdRecords, 2);
  plan.recordEvery = std::max<std::size_t>(1, plan.step_count() / records);
  plan.backend = settings.backend;

  const kernels::Kernels k{settings.backend};
  std::vector<double> times, phases;
  double unwrapped = 0.0, last_raw = 0.0;
  HoldResult out;
  out.holdTime = holdTime;
  out.expectedMu = expectedMu;
  auto observe = [&](double t, const Wavefunction& psi) {
    const double raw = std::arg(k.inner(psiAtTf.amplitudes(), psi.amplitudes()));
    if (!times.empty()) {
      double d = raw - last_raw;
      d -= 2.0 * std::numbers::pi * std::round(d / (2.0 * std::numbers::pi));
      unwrapped += d;
    }
    last_raw = raw;
    times.push_back(t);
    phases.push_back(unwrapped);
    const double change = density_l1_distance(psi, psiAtTf);
    out.densityChangeMax = std::max(out.densityChangeMax, change);
    out.densityChangeEnd = change;
  };
  propagate(psiAtTf, plan, observe);

  // Least-squares slope of the unwrapped overlap phase.
  const double n = static_cast<double>(times.size());
  double st = 0, sp = 0, stt = 0, stp = 0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    st += times[i];
    sp += phases[i];
    stt += times[i] * times[i];
    stp += times[i] * phases[i];
  }
  const double slope = (n * stp - st * sp) / (n * stt - st * st);
  out.measuredMu = -slope;
  out.relativeError = std::abs(out.measuredMu - expectedMu) / std::abs(expectedMu);
  return out;
}

void hold_report(ValidationReport& report, double holdTime) {
  const DesignSpec ds = to_dimensionless(report.spec);
  const auto traj = design_trajectory(ds);
  const double g_final = report.gTilde * coupling_ratio(traj, ds.tF);
  const double expected = report.muInitial / std::pow(report.finalScale, ds.nu() - 2);
  report.hold = hold_and_verify_stationarity(report.designedFinal, ds.omegaF, g_final, expected,
                                             holdTime, report.settings);
  if (report.settings.runBaseline) {
    try {
      report.baselineHold = hold_and_verify_stationarity(report.baselineFinal, ds.omegaF, g_final,
                                                         expected, holdTime, report.settings);
    } catch (const GridOverflow&) {
      // The baseline cloud leaving the box is itself the non-stationary outcome.
      HoldResult escaped;
      escaped.holdTime = holdTime;
      escaped.expectedMu = expected;
      escaped.densityChangeMax = escaped.densityChangeEnd = std::numeric_limits<double>::infinity();
      escaped.measuredMu = std::numeric_limits<double>::quiet_NaN();
      escaped.relativeError = std::numeric_limits<double>::infinity();
      report.baselineHold = escaped;
    }
  }
}

namespace {

void write_hold(std::ostringstream& os, const std::string& prefix, const HoldResult& h) {
  os << prefix << "hold_time: " << h.holdTime << '\n'
     << prefix << "density_l1_change_max: " << h.densityChangeMax << '\n'
     << prefix << "density_l1_change_end: " << h.densityChangeEnd << '\n'
     << prefix << "measured_mu: " << h.measuredMu << '\n'
     << prefix << "expected_mu: " << h.expectedMu << '\n'
     << prefix << "mu_relative_error: " << h.relativeError << '\n';
}

}  // namespace

std::string ValidationReport::to_text() const {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  const auto& s = settings;
  os << "regime: " << to_string(spec.regime) << '\n'
     << "ansatz: " << to_string(spec.ansatz) << '\n'
     << "omega0_rad_s: " << spec.omega0 << '\n'
     << "omegaf_rad_s: " << spec.omegaF << '\n'
     << "tf_s: " << spec.tF << '\n'
     << "samples: " << spec.samples << '\n'
     << "nu: " << spec.nu() << '\n'
     << "g_tilde: " << gTilde << '\n'
     << "grid_dimension: " << s.grid.dimension << '\n'
     << "grid_points: " << s.grid.pointsPerAxis << '\n'
     << "grid_extent: " << s.grid.extent << '\n'
     << "steps: " << s.steps << '\n'
     << "records: " << s.records << '\n'
     << "hold_periods: " << s.holdPeriods << '\n'
     << "baseline: linear omega ramp omega(t)=omega0+(omegaf-omega0)t/tf, same g(t)\n"
     << "final_scale: " << finalScale << '\n'
     << "fidelity_to_target: " << fidelityToTarget << '\n'
     << "fidelity_to_scaling_law: " << fidelityToScalingLaw << '\n'
     << "baseline_fidelity: " << baselineFidelity << '\n'
     << "l2_to_scaling_law: " << l2ToScalingLaw << '\n'
     << "l2_to_scaling_law_phase_aligned: " << l2ToScalingLawAligned << '\n'
     << "width_tracking_error: " << widthTrackingError << '\n'
     << "ermakov_residual_max_over_omega0_sq: " << ermakovResidualMax << '\n';
  for (std::size_t i = 0; i < boundaryResiduals.size(); ++i)
    os << "boundary_residual_" << i << ": " << boundaryResiduals[i] << '\n';
  os << "min_omega_sq: " << minOmegaSq << '\n' << "expulsive_intervals: " << expulsiveIntervals.size() << '\n';
  for (const auto& iv : expulsiveIntervals) os << "expulsive_interval: " << iv.start << ' ' << iv.end << '\n';
  os << "mu_initial: " << muInitial << '\n'
     << "mu_target: " << muTarget << '\n'
     << "peak_interaction_over_hbar_omega0: " << peakInteraction << '\n'
     << "initial_rms_radius: " << initialRadius << '\n'
     << "grid_extent_ok: " << (gridDiagnostics.extentOk ? "true" : "false") << '\n'
     << "grid_required_half_extent: " << gridDiagnostics.requiredHalfExtent << '\n'
     << "grid_resolution_ok: " << (gridDiagnostics.resolutionOk ? "true" : "false") << '\n'
     << "grid_points_per_oscillator_length: " << gridDiagnostics.pointsPerOscillatorLength << '\n';
  if (hold) write_hold(os, "", *hold);
  if (baselineHold) write_hold(os, "baseline_", *baselineHold);
  os << "thresholds_note: fidelity thresholds are acceptance choices of this tool, not reported values\n"
     << "wall_clock_s: " << wallClockSeconds << '\n';
  return os.str();
}

}  // namespace frictionless
