#include <doctest.h>

#include <cmath>
#include <numbers>

#include "frictionless/errors.hpp"
#include "frictionless/gpe_solver.hpp"
#include "frictionless/validation.hpp"
#include "oracles.hpp"

using namespace frictionless;

TEST_CASE("harmonic ground states") {
  const auto s1 = ground_state_imaginary_time(Grid{1, 256, 32.0}, 1.0, 0.0);
  CHECK(s1.mu == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(fidelity(s1.psi0, gaussian(s1.psi0.grid(), std::sqrt(0.5))) > 1.0 - 1e-10);

  const auto s2 = ground_state_imaginary_time(Grid{2, 64, 16.0}, 1.0, 0.0);
  CHECK(s2.mu == doctest::Approx(1.0).epsilon(1e-8));

  const auto w = ground_state_imaginary_time(Grid{1, 256, 64.0}, 0.25, 0.0);
  CHECK(w.mu == doctest::Approx(0.125).epsilon(1e-8));
}

TEST_CASE("interacting ground states approach Thomas-Fermi") {
  const auto s1 = ground_state_imaginary_time(Grid{1, 512, 32.0}, 1.0, 400.0);
  CHECK(s1.mu == doctest::Approx(oracle::tf_mu_1d(400.0, 1.0)).epsilon(0.01));

  ImaginaryTimeOptions opts;
  opts.dt = 5e-3;
  const auto s2 = ground_state_imaginary_time(Grid{2, 64, 16.0}, 1.0, 300.0, opts);
  CHECK(s2.mu == doctest::Approx(oracle::tf_mu_2d(300.0, 1.0)).epsilon(0.03));
}

TEST_CASE("virial identity 2T - 2V + d*I = 0") {
  for (int d : {1, 2}) {
    const Grid grid = d == 1 ? Grid{1, 256, 32.0} : Grid{2, 64, 16.0};
    const double g = 10.0;
    const auto s = ground_state_imaginary_time(grid, 1.0, g);
    const auto o = observables(s.psi0, 1.0, g);
    CHECK(std::abs(2 * o.kinetic - 2 * o.potential + d * o.interaction) < 1e-5 * o.energy);
    CHECK(o.mu == doctest::Approx(s.mu).epsilon(1e-9));
  }
}

TEST_CASE("free expansion of a Gaussian") {
  const Grid grid{1, 1024, 128.0};
  const double sigma0 = std::sqrt(0.5);
  PropagationPlan plan;
  plan.omegaSqOfT = [](double) { return 0.0; };
  plan.gOfT = [](double) { return 0.0; };
  plan.dt = 1e-3;
  plan.tEnd = 5.0;
  plan.recordEvery = 1000;
  plan.storeSnapshots = true;
  const auto res = propagate(gaussian(grid, sigma0), plan);
  REQUIRE(res.snapshots.size() == 6);
  for (const auto& snap : res.snapshots)
    CHECK(axis_variance(snap.psi) == doctest::Approx(oracle::free_variance(sigma0, snap.t)).epsilon(1e-10));
}

TEST_CASE("stationary state only rotates its phase") {
  const Grid grid{1, 256, 32.0};
  const double g = 5.0;
  const auto s = ground_state_imaginary_time(grid, 1.0, g);
  PropagationPlan plan;
  plan.omegaSqOfT = [](double) { return 1.0; };
  plan.gOfT = [g](double) { return g; };
  plan.dt = 1e-3;
  plan.tEnd = 2.0;
  const auto res = propagate(s.psi0, plan);
  CHECK(fidelity(res.psi, s.psi0) > 1.0 - 1e-9);
  const auto ov = kernels::serial::inner(s.psi0.amplitudes(), res.psi.amplitudes()) * grid.cell_volume();
  CHECK(std::remainder(std::arg(ov) + s.mu * 2.0, 2.0 * std::numbers::pi) == doctest::Approx(0.0).scale(1.0).epsilon(1e-6));
}

TEST_CASE("norm is conserved under a time-dependent trap") {
  const Grid grid{2, 64, 16.0};
  const auto psi0 = ground_state_imaginary_time(grid, 1.0, 20.0).psi0;
  PropagationPlan plan;
  plan.omegaSqOfT = [](double t) { return 1.0 - 0.5 * std::sin(t); };
  plan.gOfT = [](double t) { return 20.0 * (1.0 + 0.1 * t); };
  plan.dt = 5e-3;
  plan.tEnd = 1.0;
  const auto res = propagate(psi0, plan);
  CHECK(res.psi.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(res.steps == 200);
}

TEST_CASE("serial and parallel propagation agree") {
  const Grid grid{1, 256, 32.0};
  const auto psi0 = gaussian(grid, 1.0);
  PropagationPlan plan;
  plan.omegaSqOfT = [](double) { return 1.0; };
  plan.gOfT = [](double) { return 3.0; };
  plan.dt = 1e-3;
  plan.tEnd = 1.0;
  plan.backend = kernels::Backend::Serial;
  const auto a = propagate(psi0, plan);
  plan.backend = kernels::Backend::Parallel;
  const auto b = propagate(psi0, plan);
  CHECK(l2_distance(a.psi, b.psi) < 1e-13);
}

TEST_CASE("observer sees the start, every record and the end") {
  const Grid grid{1, 64, 16.0};
  PropagationPlan plan;
  plan.omegaSqOfT = [](double) { return 1.0; };
  plan.gOfT = [](double) { return 0.0; };
  plan.dt = 0.005;
  plan.tEnd = 1.0;
  plan.recordEvery = 60;
  std::vector<double> times;
  propagate(gaussian(grid, 1.0), plan, [&](double t, const Wavefunction&) { times.push_back(t); });
  REQUIRE(times.size() == 5);  // steps 0, 60, 120, 180, 200
  CHECK(times.front() == 0.0);
  CHECK(times[1] == doctest::Approx(0.3));
  CHECK(times[3] == doctest::Approx(0.9));
  CHECK(times.back() == doctest::Approx(1.0));
}

TEST_CASE("propagation guards") {
  const Grid grid{1, 64, 16.0};
  PropagationPlan plan;
  plan.omegaSqOfT = [](double) { return -1.0; };
  plan.gOfT = [](double) { return 0.0; };
  plan.dt = 0.005;
  plan.tEnd = 10.0;
  CHECK_THROWS_AS(propagate(gaussian(grid, 1.0), plan), GridOverflow);

  plan.dt = 0.1;  // above 0.1 dx^2
  CHECK_THROWS_AS(propagate(gaussian(grid, 1.0), plan), ConfigError);
  plan.dt = 0.005;
  plan.tEnd = 0.0;
  CHECK_THROWS_AS(propagate(gaussian(grid, 1.0), plan), ConfigError);
  plan.tEnd = 1.0;
  plan.gOfT = {};
  CHECK_THROWS_AS(propagate(gaussian(grid, 1.0), plan), ConfigError);
}

TEST_CASE("ground state errors") {
  const Grid grid{1, 64, 16.0};
  CHECK_THROWS_AS(ground_state_imaginary_time(grid, 1.0, -1.0), InvalidCoupling);
  CHECK_THROWS_AS(ground_state_imaginary_time(grid, 0.0, 1.0), ConfigError);
  ImaginaryTimeOptions opts;
  opts.maxSteps = 10;
  CHECK_THROWS_AS(ground_state_imaginary_time(grid, 1.0, 1.0, opts), NoConvergence);
}
