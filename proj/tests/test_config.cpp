#include <doctest.h>

#include <numbers>

#include "frictionless/config.hpp"
#include "frictionless/errors.hpp"

using namespace frictionless;

TEST_CASE("defaults describe the 100-fold expansion in 6 ms") {
  const auto cfg = parse_config("");
  const auto spec = cfg.design_spec(Regime::TwoD, Ansatz::Polynomial5);
  CHECK(spec.omega0 == doctest::Approx(2 * std::numbers::pi * 250));
  CHECK(spec.omegaF == doctest::Approx(2 * std::numbers::pi * 2.5));
  CHECK(spec.tF == 6e-3);
}

TEST_CASE("keys, comments and lists") {
  const auto cfg = parse_config(
      "# header comment\n"
      "omega0_hz = 100   # trailing\n"
      "tf_ms = 12\n"
      "regimes = TwoD, OneD_TF, TwoD\n"
      "ansatz = ExpPolynomial5\n"
      "g_tilde = 0, 1, 10, 1\n"
      "backend = serial\n");
  CHECK(cfg.omega0Hz == 100.0);
  CHECK(cfg.tFSeconds == doctest::Approx(0.012));
  REQUIRE(cfg.regimes.size() == 2);
  CHECK(cfg.regimes[0] == Regime::TwoD);
  CHECK(cfg.regimes[1] == Regime::OneD_TF);
  CHECK(cfg.ansaetze == std::vector{Ansatz::ExpPolynomial5});
  CHECK(cfg.gTilde == std::vector{0.0, 1.0, 10.0});
  CHECK(cfg.backend == kernels::Backend::Serial);
}

TEST_CASE("empty coupling list") {
  CHECK(parse_config("g_tilde =\n").gTilde.empty());
  CHECK(parse_config("g_tilde = none\n").gTilde.empty());
}

TEST_CASE("resolved echo parses back to itself") {
  const auto cfg = parse_config("omegaf_hz = 5\nregimes = OneD_TunedG, ThreeD_TF\ng_tilde = 0.1, 100\nimag_dt = 0.002\n");
  const auto text = cfg.to_text();
  CHECK(parse_config(text).to_text() == text);
}

TEST_CASE("invalid configurations") {
  CHECK_THROWS_AS(parse_config("colour = blue\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("steps = 10\nsteps = 20\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("steps = ten\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("omega0_hz = -1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("tf_ms = 6\ntf_s = 0.006\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("regimes = FourD\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("g_tilde = -3\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("grid_points_1d = 1000\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("samples = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("just words\n"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/run.cfg"), ConfigError);
}
