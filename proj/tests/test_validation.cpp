#include <doctest.h>

#include <cmath>
#include <numbers>

#include "frictionless/errors.hpp"
#include "frictionless/validation.hpp"
#include "oracles.hpp"

using namespace frictionless;

TEST_CASE("fidelity of Gaussians of different widths") {
  for (int d : {1, 2}) {
    const Grid grid = d == 1 ? Grid{1, 512, 64.0} : Grid{2, 128, 48.0};
    const auto a = gaussian(grid, 1.0);
    const auto b = gaussian(grid, 2.0);
    CHECK(fidelity(a, b) == doctest::Approx(oracle::gaussian_fidelity(1.0, 2.0, d)).epsilon(1e-10));
    CHECK(fidelity(a, a) == doctest::Approx(1.0));
  }
}

TEST_CASE("global phase is invisible to fidelity and aligned distance") {
  const Grid grid{1, 128, 32.0};
  const auto a = gaussian(grid, 1.0);
  auto b = a;
  for (auto& v : b.amplitudes()) v *= std::polar(1.0, 0.7);
  CHECK(fidelity(a, b) == doctest::Approx(1.0));
  CHECK(l2_distance_phase_aligned(a, b) < 1e-12);
  CHECK(l2_distance(a, b) == doctest::Approx(std::abs(1.0 - std::polar(1.0, 0.7))));
  CHECK(density_l1_distance(a, b) < 1e-12);
}

TEST_CASE("fidelity is scale invariant and bounded") {
  const Grid grid{1, 128, 32.0};
  const auto a = gaussian(grid, 1.0);
  auto b = gaussian(grid, 1.3);
  for (auto& v : b.amplitudes()) v *= 3.0;
  const double f = fidelity(a, b);
  CHECK(f == doctest::Approx(oracle::gaussian_fidelity(1.0, 1.3, 1)));
  CHECK(f <= 1.0);
}

TEST_CASE("density L1 distance of shifted profiles") {
  const Grid grid{1, 1024, 64.0};
  const auto a = gaussian(grid, 1.0);
  const auto b = gaussian(grid, 2.0);
  // Disjoint-support limit is 2; equal densities give 0.
  const double d = density_l1_distance(a, b);
  CHECK(d > 0.0);
  CHECK(d < 2.0);
}

TEST_CASE("mismatched grids are rejected") {
  const auto a = gaussian(Grid{1, 64, 16.0}, 1.0);
  const auto b = gaussian(Grid{1, 64, 20.0}, 1.0);
  CHECK_THROWS_AS(fidelity(a, b), GridMismatch);
  CHECK_THROWS_AS(l2_distance(a, b), GridMismatch);
}

TEST_CASE("design diagnostics") {
  const double two_pi = 2.0 * std::numbers::pi;
  for (auto r : kAllRegimes)
    for (auto an : kAllAnsaetze) {
      const auto traj = design_trajectory({two_pi * 250, two_pi * 2.5, 6e-3, r, an, 1000});
      CHECK(ermakov_residual_max(traj, 1000, 42) < 1e-9);
      for (double res : boundary_residuals(traj)) CHECK(res < 1e-10);
    }
}

TEST_CASE("dimensionless conversion") {
  const DesignSpec si{1570.0, 15.7, 6e-3, Regime::TwoD, Ansatz::Polynomial5, 50};
  const auto d = to_dimensionless(si);
  CHECK(d.omega0 == 1.0);
  CHECK(d.omegaF == doctest::Approx(0.01));
  CHECK(d.tF == doctest::Approx(1570.0 * 6e-3));
  CHECK(d.final_scale() == doctest::Approx(si.final_scale()));
}

TEST_CASE("small linear frictionless check") {
  SimulationSettings s;
  s.grid = Grid{1, 256, 64.0};
  s.steps = 2000;
  s.records = 20;
  const DesignSpec spec{1.0, 0.04, 4.0, Regime::OneD_TunedG, Ansatz::Polynomial5, 500};
  const auto report = run_frictionless_check(spec, 0.0, s);
  CHECK(report.fidelityToTarget > 0.9999);
  CHECK(report.fidelityToScalingLaw > 0.9999);
  CHECK(report.baselineFidelity < report.fidelityToTarget);
  CHECK(report.widthTrackingError < 1e-3);
  CHECK(report.finalScale == doctest::Approx(5.0));
  CHECK(report.muTarget == doctest::Approx(0.02).epsilon(1e-6));
  CHECK(report.to_text().find("fidelity_to_target: ") != std::string::npos);
}

TEST_CASE("hold of an exact stationary state") {
  SimulationSettings s;
  s.grid = Grid{1, 256, 32.0};
  const auto gs = ground_state_imaginary_time(s.grid, 0.5, 4.0);
  const auto hold = hold_and_verify_stationarity(gs.psi0, 0.5, 4.0, gs.mu, 4.0 * std::numbers::pi, s);
  CHECK(hold.densityChangeMax < 1e-6);
  CHECK(hold.relativeError < 1e-6);
}

TEST_CASE("check rejects bad inputs") {
  SimulationSettings s;
  s.grid = Grid{1, 256, 64.0};
  const DesignSpec spec{1.0, 0.04, 4.0, Regime::OneD_TunedG, Ansatz::Polynomial5, 500};
  CHECK_THROWS_AS(run_frictionless_check(spec, -1.0, s), InvalidCoupling);
  s.steps = 0;
  CHECK_THROWS_AS(run_frictionless_check(spec, 0.0, s), ConfigError);
}
