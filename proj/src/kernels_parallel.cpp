#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "frictionless/kernels.hpp"

namespace frictionless::kernels::parallel {

namespace {

// Sums term(i) over [0, n) in blocks of kReductionBlock; block partials are
// combined serially in block order.
template <typename T, typename Term>
T blocked_sum(std::size_t n, Term term) {
  const auto blocks = static_cast<std::int64_t>((n + kReductionBlock - 1) / kReductionBlock);
  std::vector<T> partial(static_cast<std::size_t>(blocks), T{});
#pragma omp parallel for schedule(static)
  for (std::int64_t blk = 0; blk < blocks; ++blk) {
    const std::size_t lo = static_cast<std::size_t>(blk) * kReductionBlock;
    const std::size_t hi = std::min(n, lo + kReductionBlock);
    T s{};
    for (std::size_t i = lo; i < hi; ++i) s += term(i);
    partial[static_cast<std::size_t>(blk)] = s;
  }
  T total{};
  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace

void multiply(std::span<cplx> psi, std::span<const cplx> factors) {
  const auto n = static_cast<std::int64_t>(psi.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) psi[i] *= factors[i];
}

void scale(std::span<cplx> psi, double factor) {
  const auto n = static_cast<std::int64_t>(psi.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) psi[i] *= factor;
}

void potential_phase(std::span<cplx> psi, std::span<const double> r2, double half_omega_sq, double g,
                     double dt) {
  const auto n = static_cast<std::int64_t>(psi.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const double phase = (half_omega_sq * r2[i] + g * std::norm(psi[i])) * dt;
    psi[i] *= cplx(std::cos(phase), -std::sin(phase));
  }
}

void potential_decay(std::span<cplx> psi, std::span<const double> r2, double half_omega_sq, double g,
                     double dt, double shift) {
  const auto n = static_cast<std::int64_t>(psi.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    psi[i] *= decay_factor(half_omega_sq * r2[i] - shift, g, std::norm(psi[i]), dt);
}

double sum_abs2(std::span<const cplx> psi) {
  return blocked_sum<double>(psi.size(), [&](std::size_t i) { return std::norm(psi[i]); });
}

double sum_weighted_abs2(std::span<const cplx> psi, std::span<const double> weight) {
  return blocked_sum<double>(psi.size(),
                             [&](std::size_t i) { return weight[i] * std::norm(psi[i]); });
}

double sum_abs4(std::span<const cplx> psi) {
  return blocked_sum<double>(psi.size(), [&](std::size_t i) {
    const double v = std::norm(psi[i]);
    return v * v;
  });
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  return blocked_sum<cplx>(a.size(), [&](std::size_t i) { return std::conj(a[i]) * b[i]; });
}

}  // namespace frictionless::kernels::parallel
