#include "frictionless/trajectory_design.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "frictionless/errors.hpp"

namespace frictionless {

namespace {

constexpr std::size_t kPositivityPoints = 10000;
constexpr int kMinTauPanels = 2000;

// Rows: value, first and second s-derivative of the monomials s^0..s^5 at s.
void boundary_rows(Eigen::Matrix<double, 6, 6>& m, int first_row, double s) {
  for (int j = 0; j < 6; ++j) {
    m(first_row, j) = std::pow(s, j);
    m(first_row + 1, j) = j >= 1 ? j * std::pow(s, j - 1) : 0.0;
    m(first_row + 2, j) = j >= 2 ? j * (j - 1) * std::pow(s, j - 2) : 0.0;
  }
}

std::array<double, 6> solve_boundary_system(double value0, double value1) {
  Eigen::Matrix<double, 6, 6> m;
  boundary_rows(m, 0, 0.0);
  boundary_rows(m, 3, 1.0);
  Eigen::Matrix<double, 6, 1> rhs;
  rhs << value0, 0.0, 0.0, value1, 0.0, 0.0;

  const auto qr = m.colPivHouseholderQr();
  if (!qr.isInvertible()) throw SingularSystem("boundary interpolation system is singular");
  Eigen::Matrix<double, 6, 1> x = qr.solve(rhs);
  // One refinement step brings the boundary residuals down to rounding level.
  x += qr.solve(Eigen::Matrix<double, 6, 1>(rhs - m * x));

  std::array<double, 6> out{};
  for (int j = 0; j < 6; ++j) out[j] = x(j);
  return out;
}

}  // namespace

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::OneD_TunedG: return "OneD_TunedG";
    case Regime::OneD_TF: return "OneD_TF";
    case Regime::TwoD: return "TwoD";
    case Regime::ThreeD_TunedG: return "ThreeD_TunedG";
    case Regime::ThreeD_TF: return "ThreeD_TF";
  }
  return "?";
}

std::string_view to_string(Ansatz ansatz) {
  return ansatz == Ansatz::Polynomial5 ? "Polynomial5" : "ExpPolynomial5";
}

Regime parse_regime(std::string_view name) {
  for (auto r : kAllRegimes)
    if (to_string(r) == name) return r;
  throw ConfigError("unknown regime '" + std::string(name) + "'");
}

Ansatz parse_ansatz(std::string_view name) {
  for (auto a : kAllAnsaetze)
    if (to_string(a) == name) return a;
  throw ConfigError("unknown ansatz '" + std::string(name) + "'");
}

int ermakov_exponent(Regime regime) {
  switch (regime) {
    case Regime::OneD_TF: return 3;
    case Regime::ThreeD_TF: return 5;
    default: return 4;
  }
}

int dimension(Regime regime) {
  switch (regime) {
    case Regime::OneD_TunedG:
    case Regime::OneD_TF: return 1;
    case Regime::TwoD: return 2;
    default: return 3;
  }
}

void DesignSpec::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(omega0)) throw ConfigError("omega0 must be positive and finite");
  if (!positive(omegaF)) throw ConfigError("omegaF must be positive and finite");
  if (!positive(tF)) throw ConfigError("tF must be positive and finite");
  if (samples < 2) throw ConfigError("samples must be at least 2");
}

double DesignSpec::final_scale() const { return std::pow(omega0 / omegaF, 2.0 / nu()); }

ScalingTrajectory::ScalingTrajectory(DesignSpec spec, std::array<double, 6> normalized)
    : spec_(spec), coeffs_(normalized) {
  check_positivity();
  build_tau_table();
}

std::array<double, 3> ScalingTrajectory::poly_derivatives(double s) const {
  double p = coeffs_[5], dp = 0.0, ddp = 0.0;
  for (int j = 4; j >= 0; --j) {
    ddp = ddp * s + 2.0 * dp;
    dp = dp * s + p;
    p = p * s + coeffs_[j];
  }
  return {p, dp, ddp};
}

double ScalingTrajectory::b(double t) const {
  const auto [p, dp, ddp] = poly_derivatives(t / spec_.tF);
  return spec_.ansatz == Ansatz::Polynomial5 ? p : std::exp(p);
}

double ScalingTrajectory::bdot(double t) const {
  const auto [p, dp, ddp] = poly_derivatives(t / spec_.tF);
  const double scale = 1.0 / spec_.tF;
  return spec_.ansatz == Ansatz::Polynomial5 ? dp * scale : std::exp(p) * dp * scale;
}

double ScalingTrajectory::bddot(double t) const {
  const auto [p, dp, ddp] = poly_derivatives(t / spec_.tF);
  const double scale = 1.0 / (spec_.tF * spec_.tF);
  return spec_.ansatz == Ansatz::Polynomial5 ? ddp * scale : std::exp(p) * (dp * dp + ddp) * scale;
}

std::array<double, 6> ScalingTrajectory::coefficients() const {
  std::array<double, 6> out{};
  for (int j = 0; j < 6; ++j) out[j] = coeffs_[j] / std::pow(spec_.tF, j);
  return out;
}

double ScalingTrajectory::tau_weight(double t) const {
  return std::pow(b(t), -(spec_.nu() - 2));
}

double ScalingTrajectory::integrate_tau(double t0, double t1, int panels) const {
  if (t1 <= t0) return 0.0;
  const double h = (t1 - t0) / panels;
  double sum = tau_weight(t0) + tau_weight(t1);
  for (int k = 1; k < panels; ++k) sum += (k % 2 ? 4.0 : 2.0) * tau_weight(t0 + k * h);
  return sum * h / 3.0;
}

void ScalingTrajectory::check_positivity() const {
  const double tF = spec_.tF;
  const double h = tF / static_cast<double>(kPositivityPoints);
  double prev_slope = bdot(0.0);
  for (std::size_t i = 0; i <= kPositivityPoints; ++i) {
    const double t = static_cast<double>(i) * h;
    const double value = b(t);
    if (!(value > 0.0)) {
      std::ostringstream msg;
      msg << "scaling factor b(t) <= 0 at t=" << t;
      throw PositivityViolation(msg.str());
    }
    // A slope sign change from - to + brackets a local minimum between samples.
    const double slope = bdot(t);
    if (i > 0 && prev_slope < 0.0 && slope > 0.0) {
      double lo = t - h, hi = t;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (bdot(mid) < 0.0 ? lo : hi) = mid;
      }
      if (!(b(0.5 * (lo + hi)) > 0.0))
        throw PositivityViolation("scaling factor b(t) has a non-positive local minimum");
    }
    prev_slope = slope;
  }
}

void ScalingTrajectory::build_tau_table() {
  const std::size_t n = spec_.samples;
  const int intervals = static_cast<int>(n - 1);
  int panels = std::max(2, (kMinTauPanels + intervals - 1) / intervals);
  if (panels % 2) ++panels;
  panels_per_interval_ = panels;

  times_.resize(n);
  taus_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    times_[i] = spec_.tF * static_cast<double>(i) / static_cast<double>(intervals);
  times_.back() = spec_.tF;
  taus_[0] = 0.0;
  for (std::size_t i = 1; i < n; ++i)
    taus_[i] = taus_[i - 1] + integrate_tau(times_[i - 1], times_[i], panels);
}

ScalingTrajectory solve_polynomial_b(const DesignSpec& spec) {
  spec.validate();
  if (spec.ansatz != Ansatz::Polynomial5)
    throw ConfigError("solve_polynomial_b requires the Polynomial5 ansatz");
  return ScalingTrajectory(spec, solve_boundary_system(1.0, spec.final_scale()));
}

ScalingTrajectory solve_exp_polynomial_b(const DesignSpec& spec) {
  spec.validate();
  if (spec.ansatz != Ansatz::ExpPolynomial5)
    throw ConfigError("solve_exp_polynomial_b requires the ExpPolynomial5 ansatz");
  return ScalingTrajectory(spec, solve_boundary_system(0.0, std::log(spec.final_scale())));
}

ScalingTrajectory design_trajectory(const DesignSpec& spec) {
  return spec.ansatz == Ansatz::Polynomial5 ? solve_polynomial_b(spec)
                                            : solve_exp_polynomial_b(spec);
}

double omega_squared(const ScalingTrajectory& traj, double t) {
  const auto& spec = traj.spec();
  const double b = traj.b(t);
  return spec.omega0 * spec.omega0 / std::pow(b, spec.nu()) - traj.bddot(t) / b;
}

double scaled_time(const ScalingTrajectory& traj, double t) {
  const double tF = traj.spec_.tF;
  if (t < 0.0 || t > tF * (1.0 + 1e-12)) throw std::out_of_range("scaled_time: t outside [0, tF]");
  t = std::min(t, tF);
  const auto& times = traj.times_;
  const double h = times[1] - times[0];
  auto i = static_cast<std::size_t>(t / h);
  i = std::min(i, times.size() - 1);
  while (i > 0 && times[i] > t) --i;
  if (times[i] == t) return traj.taus_[i];
  return traj.taus_[i] + traj.integrate_tau(times[i], t, traj.panels_per_interval_);
}

FrequencyTrajectory sample_frequency_trajectory(const ScalingTrajectory& traj) {
  FrequencyTrajectory ft{traj.time_grid(), {}, traj};
  ft.omegaSq.reserve(ft.timeGrid.size());
  for (double t : ft.timeGrid) ft.omegaSq.push_back(omega_squared(traj, t));
  return ft;
}

double coupling_ratio(const ScalingTrajectory& traj, double t) {
  const double tc = std::clamp(t, 0.0, traj.spec().tF);
  switch (traj.spec().regime) {
    case Regime::OneD_TunedG: return 1.0 / traj.b(tc);
    case Regime::ThreeD_TunedG: return traj.b(tc);
    default: return 1.0;
  }
}

CouplingSchedule coupling_schedule(const ScalingTrajectory& traj, double g0) {
  return CouplingSchedule(traj, g0);
}

double held_omega_squared(const ScalingTrajectory& traj, double t) {
  const auto& spec = traj.spec();
  if (t <= 0.0) return spec.omega0 * spec.omega0;
  if (t >= spec.tF) return spec.omegaF * spec.omegaF;
  return omega_squared(traj, t);
}

std::vector<Interval> expulsive_intervals(const FrequencyTrajectory& ft) {
  const auto& traj = ft.source;
  const double tol = traj.spec().tF * 1e-9;
  // Bisects for the sign change of omega^2 between lo (sign of lo_negative) and hi.
  auto refine = [&](double lo, double hi, bool lo_negative) {
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      const bool neg = omega_squared(traj, mid) < 0.0;
      (neg == lo_negative ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };

  std::vector<Interval> out;
  const auto& t = ft.timeGrid;
  const auto& w = ft.omegaSq;
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] >= 0.0) {
      ++i;
      continue;
    }
    const double start = i == 0 ? t[0] : refine(t[i - 1], t[i], false);
    std::size_t j = i;
    while (j < w.size() && w[j] < 0.0) ++j;
    const double end = j == w.size() ? t.back() : refine(t[j - 1], t[j], true);
    out.push_back({start, end});
    i = j;
  }
  return out;
}

}  // namespace frictionless
