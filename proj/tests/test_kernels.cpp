#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "frictionless/fft.hpp"
#include "frictionless/kernels.hpp"
#include "frictionless/wavefunction.hpp"

using namespace frictionless;
namespace k = frictionless::kernels;

namespace {

std::vector<cplx> random_field(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  std::vector<cplx> v(n);
  for (auto& x : v) x = {d(rng), d(rng)};
  return v;
}

}  // namespace

TEST_CASE("serial and parallel kernels agree") {
  // Odd size so the last reduction block is partial.
  const std::size_t n = 3 * k::kReductionBlock + 17;
  const auto psi = random_field(n, 1);
  const auto other = random_field(n, 2);
  std::vector<double> r2(n);
  for (std::size_t i = 0; i < n; ++i) r2[i] = 1e-3 * static_cast<double>(i);

  CHECK(k::parallel::sum_abs2(psi) == doctest::Approx(k::serial::sum_abs2(psi)).epsilon(1e-13));
  CHECK(k::parallel::sum_abs4(psi) == doctest::Approx(k::serial::sum_abs4(psi)).epsilon(1e-13));
  CHECK(k::parallel::sum_weighted_abs2(psi, r2) ==
        doctest::Approx(k::serial::sum_weighted_abs2(psi, r2)).epsilon(1e-13));
  const auto ip = k::parallel::inner(psi, other), is = k::serial::inner(psi, other);
  CHECK(std::abs(ip - is) < 1e-12 * std::abs(is) + 1e-10);

  auto a = psi, b = psi;
  k::serial::potential_phase(a, r2, 0.5, 2.0, 0.01);
  k::parallel::potential_phase(b, r2, 0.5, 2.0, 0.01);
  for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-14);

  a = psi, b = psi;
  k::serial::potential_decay(a, r2, 0.5, 2.0, 0.01);
  k::parallel::potential_decay(b, r2, 0.5, 2.0, 0.01);
  for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-14);

  a = psi, b = psi;
  k::serial::multiply(a, other);
  k::parallel::multiply(b, other);
  k::serial::scale(a, 0.25);
  k::parallel::scale(b, 0.25);
  for (std::size_t i = 0; i < n; ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("parallel reductions are reproducible") {
  const auto psi = random_field(100'003, 7);
  const double first = k::parallel::sum_abs2(psi);
  for (int rep = 0; rep < 5; ++rep) CHECK(k::parallel::sum_abs2(psi) == first);
}

TEST_CASE("potential phase is unitary") {
  const auto psi = random_field(512, 3);
  std::vector<double> r2(512, 4.0);
  auto a = psi;
  k::serial::potential_phase(a, r2, 0.5, 3.0, 0.1);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i]) == doctest::Approx(std::abs(psi[i])));
  // The nonlinear phase uses the modulus before the update.
  const double expected = -(0.5 * 4.0 + 3.0 * std::norm(psi[0])) * 0.1;
  CHECK(std::arg(a[0] / psi[0]) == doctest::Approx(expected));
}

TEST_CASE("fft round trip and plane wave") {
  for (int d : {1, 2}) {
    const std::size_t n = 32;
    FftPlan plan(d, n);
    const std::size_t size = d == 1 ? n : n * n;
    auto data = random_field(size, 11);
    const auto orig = data;
    plan.forward(data);
    plan.inverse(data);
    for (std::size_t i = 0; i < size; ++i) CHECK(std::abs(data[i] / static_cast<double>(size) - orig[i]) < 1e-13);
  }
  FftPlan plan(1, 16);
  std::vector<cplx> wave(16);
  for (int j = 0; j < 16; ++j) wave[j] = std::polar(1.0, 2.0 * std::numbers::pi * 3.0 * j / 16.0);
  plan.forward(wave);
  CHECK(std::abs(wave[3] - cplx(16.0, 0.0)) < 1e-12);
  CHECK(std::abs(wave[5]) < 1e-12);
}

TEST_CASE("grid geometry") {
  Grid g{1, 16, 8.0};
  CHECK(g.spacing() == 0.5);
  CHECK(g.axis().front() == -4.0);
  CHECK(g.axis().back() == 3.5);
  const auto kx = g.wavenumbers();
  CHECK(kx[1] == doctest::Approx(2.0 * std::numbers::pi / 8.0));
  CHECK(kx[8] < 0.0);
  Grid g2{2, 8, 4.0};
  CHECK(g2.size() == 64);
  CHECK(g2.cell_volume() == 0.25);
  const auto r2 = g2.radius_squared();
  CHECK(r2[0] == 8.0);  // (-2, -2)
  CHECK(r2[1] == doctest::Approx(4.0 + 2.25));
  CHECK_THROWS(Grid{1, 12, 1.0}.validate());
  CHECK_THROWS(Grid{3, 16, 1.0}.validate());
}

TEST_CASE("gaussian moments") {
  Grid g{2, 128, 32.0};
  const auto psi = gaussian(g, 1.5);
  CHECK(psi.norm_squared() == doctest::Approx(1.0));
  CHECK(axis_variance(psi) == doctest::Approx(2.25).epsilon(1e-10));
  CHECK(rms_radius(psi) == doctest::Approx(std::sqrt(2.0 * 2.25)).epsilon(1e-10));
}
