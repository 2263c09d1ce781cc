#include <cmath>

#include "frictionless/kernels.hpp"

namespace frictionless::kernels::serial {

void multiply(std::span<cplx> psi, std::span<const cplx> factors) {
  for (std::size_t i = 0; i < psi.size(); ++i) psi[i] *= factors[i];
}

void scale(std::span<cplx> psi, double factor) {
  for (auto& v : psi) v *= factor;
}

void potential_phase(std::span<cplx> psi, std::span<const double> r2, double half_omega_sq, double g,
                     double dt) {
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const double phase = (half_omega_sq * r2[i] + g * std::norm(psi[i])) * dt;
    psi[i] *= cplx(std::cos(phase), -std::sin(phase));
  }
}

void potential_decay(std::span<cplx> psi, std::span<const double> r2, double half_omega_sq, double g,
                     double dt, double shift) {
  for (std::size_t i = 0; i < psi.size(); ++i)
    psi[i] *= decay_factor(half_omega_sq * r2[i] - shift, g, std::norm(psi[i]), dt);
}

double sum_abs2(std::span<const cplx> psi) {
  double s = 0.0;
  for (const auto& v : psi) s += std::norm(v);
  return s;
}

double sum_weighted_abs2(std::span<const cplx> psi, std::span<const double> weight) {
  double s = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) s += weight[i] * std::norm(psi[i]);
  return s;
}

double sum_abs4(std::span<const cplx> psi) {
  double s = 0.0;
  for (const auto& v : psi) {
    const double n = std::norm(v);
    s += n * n;
  }
  return s;
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  cplx s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

}  // namespace frictionless::kernels::serial
