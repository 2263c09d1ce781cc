#pragma once

// Pointwise and reduction kernels used by the split-step propagator.
//
// Every kernel has a plain serial reference in `serial::` and an OpenMP
// version in `parallel::`. Parallel reductions accumulate fixed-size blocks
// and add the block sums in index order, so results do not depend on the
// thread count.

#include <cmath>
#include <complex>
#include <span>

namespace frictionless::kernels {

using cplx = std::complex<double>;

enum class Backend { Serial, Parallel };

inline constexpr std::size_t kReductionBlock = 2048;

// |u(dt)| / |u(0)| for u' = -(v + g|u|^2) u with rho = |u(0)|^2:
// rho(dt)/rho = 1 / (1 + 2 dt (v + g rho) expm1(2 v dt) / (2 v dt)).
inline double decay_factor(double v, double g, double rho, double dt) {
  const double x = 2.0 * v * dt;
  const double phi = std::abs(x) > 1e-12 ? std::expm1(x) / x : 1.0 + 0.5 * x;
  return 1.0 / std::sqrt(1.0 + 2.0 * dt * (v + g * rho) * phi);
}

namespace serial {
void multiply(std::span<cplx> psi, std::span<const cplx> factors);
void scale(std::span<cplx> psi, double factor);
// psi *= exp(-i (half_omega_sq * r2 + g |psi|^2) dt)
void potential_phase(std::span<cplx> psi, std::span<const double> r2, double half_omega_sq, double g,
                     double dt);
// Exact imaginary-time step of u' = -(half_omega_sq * r2 - shift + g |u|^2) u.
// With shift = <V + g|u|^2> the norm is preserved to first order, which keeps
// the split-step ground state second order in dt.
void potential_decay(std::span<cplx> psi, std::span<const double> r2, double half_omega_sq, double g,
                     double dt, double shift = 0.0);
double sum_abs2(std::span<const cplx> psi);
double sum_weighted_abs2(std::span<const cplx> psi, std::span<const double> weight);
double sum_abs4(std::span<const cplx> psi);
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
}  // namespace serial

namespace parallel {
void multiply(std::span<cplx> psi, std::span<const cplx> factors);
void scale(std::span<cplx> psi, double factor);
void potential_phase(std::span<cplx> psi, std::span<const double> r2, double half_omega_sq, double g,
                     double dt);
void potential_decay(std::span<cplx> psi, std::span<const double> r2, double half_omega_sq, double g,
                     double dt, double shift = 0.0);
double sum_abs2(std::span<const cplx> psi);
double sum_weighted_abs2(std::span<const cplx> psi, std::span<const double> weight);
double sum_abs4(std::span<const cplx> psi);
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
}  // namespace parallel

// Backend-dispatching front end.
struct Kernels {
  Backend backend = Backend::Parallel;

  void multiply(std::span<cplx> psi, std::span<const cplx> f) const {
    backend == Backend::Serial ? serial::multiply(psi, f) : parallel::multiply(psi, f);
  }
  void scale(std::span<cplx> psi, double f) const {
    backend == Backend::Serial ? serial::scale(psi, f) : parallel::scale(psi, f);
  }
  void potential_phase(std::span<cplx> psi, std::span<const double> r2, double hw2, double g,
                       double dt) const {
    backend == Backend::Serial ? serial::potential_phase(psi, r2, hw2, g, dt)
                               : parallel::potential_phase(psi, r2, hw2, g, dt);
  }
  void potential_decay(std::span<cplx> psi, std::span<const double> r2, double hw2, double g,
                       double dt, double shift = 0.0) const {
    backend == Backend::Serial ? serial::potential_decay(psi, r2, hw2, g, dt, shift)
                               : parallel::potential_decay(psi, r2, hw2, g, dt, shift);
  }
  double sum_abs2(std::span<const cplx> psi) const {
    return backend == Backend::Serial ? serial::sum_abs2(psi) : parallel::sum_abs2(psi);
  }
  double sum_weighted_abs2(std::span<const cplx> psi, std::span<const double> w) const {
    return backend == Backend::Serial ? serial::sum_weighted_abs2(psi, w)
                                      : parallel::sum_weighted_abs2(psi, w);
  }
  double sum_abs4(std::span<const cplx> psi) const {
    return backend == Backend::Serial ? serial::sum_abs4(psi) : parallel::sum_abs4(psi);
  }
  cplx inner(std::span<const cplx> a, std::span<const cplx> b) const {
    return backend == Backend::Serial ? serial::inner(a, b) : parallel::inner(a, b);
  }
};

}  // namespace frictionless::kernels
