#pragma once

// Inverse design of frictionless trap-frequency ramps.
//
// A scaling factor b(t) is interpolated between the boundary conditions
//   b(0)=1, b'(0)=b''(0)=0,  b(tF)=(omega0/omegaF)^(2/nu), b'(tF)=b''(tF)=0
// and the trap frequency follows from the Ermakov-type equation
//   b'' + omega^2(t) b = omega0^2 / b^(nu-1).
//
// Everything here is unit-agnostic: any consistent time unit works (SI seconds
// at the CLI boundary, 1/omega0 inside the simulator).

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace frictionless {

enum class Regime { OneD_TunedG, OneD_TF, TwoD, ThreeD_TunedG, ThreeD_TF };
enum class Ansatz { Polynomial5, ExpPolynomial5 };

inline constexpr std::array kAllRegimes = {Regime::OneD_TunedG, Regime::OneD_TF, Regime::TwoD,
                                           Regime::ThreeD_TunedG, Regime::ThreeD_TF};
inline constexpr std::array kAllAnsaetze = {Ansatz::Polynomial5, Ansatz::ExpPolynomial5};

std::string_view to_string(Regime regime);
std::string_view to_string(Ansatz ansatz);
Regime parse_regime(std::string_view name);
Ansatz parse_ansatz(std::string_view name);

// Exponent nu of the Ermakov-type equation: 3 for 1D-TF, 5 for 3D-TF, 4 otherwise.
int ermakov_exponent(Regime regime);
// Spatial dimension of the condensate described by the regime.
int dimension(Regime regime);

struct DesignSpec {
  double omega0 = 0.0;  // rad per time unit
  double omegaF = 0.0;
  double tF = 0.0;
  Regime regime = Regime::TwoD;
  Ansatz ansatz = Ansatz::Polynomial5;
  std::size_t samples = 1000;

  // Throws ConfigError if any field is out of range.
  void validate() const;
  int nu() const { return ermakov_exponent(regime); }
  // b(tF) = (omega0/omegaF)^(2/nu).
  double final_scale() const;
};

// Closed-form b(t) on [0, tF]; immutable after construction and safe to share
// between threads.
class ScalingTrajectory {
 public:
  const DesignSpec& spec() const { return spec_; }

  double b(double t) const;
  double bdot(double t) const;
  double bddot(double t) const;

  // Coefficients in powers of t: a_j for the polynomial ansatz (b = sum a_j t^j),
  // c_j for the exponential one (b = exp(sum c_j t^j)).
  std::array<double, 6> coefficients() const;
  // Same coefficients in powers of s = t/tF.
  const std::array<double, 6>& normalized_coefficients() const { return coeffs_; }

  const std::vector<double>& time_grid() const { return times_; }
  const std::vector<double>& tau_table() const { return taus_; }

 private:
  friend ScalingTrajectory solve_polynomial_b(const DesignSpec&);
  friend ScalingTrajectory solve_exp_polynomial_b(const DesignSpec&);
  friend double scaled_time(const ScalingTrajectory&, double);

  ScalingTrajectory(DesignSpec spec, std::array<double, 6> normalized);

  // Derivatives of the interpolated polynomial with respect to s.
  std::array<double, 3> poly_derivatives(double s) const;
  double tau_weight(double t) const;
  double integrate_tau(double t0, double t1, int panels) const;
  void check_positivity() const;
  void build_tau_table();

  DesignSpec spec_;
  std::array<double, 6> coeffs_{};
  int panels_per_interval_ = 2;
  std::vector<double> times_;
  std::vector<double> taus_;
};

struct FrequencyTrajectory {
  std::vector<double> timeGrid;
  std::vector<double> omegaSq;
  ScalingTrajectory source;  // provenance; also gives access to the closed form
};

// Solves the six boundary conditions for b = sum_{j<=5} a_j t^j.
ScalingTrajectory solve_polynomial_b(const DesignSpec& spec);
// Solves the six boundary conditions on p = ln b for b = exp(sum_{j<=5} c_j t^j).
ScalingTrajectory solve_exp_polynomial_b(const DesignSpec& spec);
// Dispatches on spec.ansatz.
ScalingTrajectory design_trajectory(const DesignSpec& spec);

// omega^2(t) = omega0^2/b^nu - b''/b, for t in [0, tF].
double omega_squared(const ScalingTrajectory& traj, double t);
// tau(t) = int_0^t b^-(nu-2) dt'.
double scaled_time(const ScalingTrajectory& traj, double t);

FrequencyTrajectory sample_frequency_trajectory(const ScalingTrajectory& traj);

// g(t)/g0 for the regime: 1/b for OneD_TunedG, b for ThreeD_TunedG, 1 otherwise.
// Held at the endpoint values outside [0, tF].
double coupling_ratio(const ScalingTrajectory& traj, double t);

class CouplingSchedule {
 public:
  CouplingSchedule(ScalingTrajectory traj, double g0) : traj_(std::move(traj)), g0_(g0) {}
  double operator()(double t) const { return g0_ * coupling_ratio(traj_, t); }
  double g0() const { return g0_; }

 private:
  ScalingTrajectory traj_;
  double g0_;
};

CouplingSchedule coupling_schedule(const ScalingTrajectory& traj, double g0);

// omega^2(t) extended outside [0, tF] by holding omega0^2 before and omegaF^2 after.
double held_omega_squared(const ScalingTrajectory& traj, double t);

struct Interval {
  double start;
  double end;
};

// Maximal windows where omega^2 < 0, boundaries bisected on the closed form to
// an absolute time tolerance of tF*1e-9.
std::vector<Interval> expulsive_intervals(const FrequencyTrajectory& ft);

}  // namespace frictionless
