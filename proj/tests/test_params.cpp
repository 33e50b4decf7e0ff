#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dqca/errors.hpp"
#include "dqca/params.hpp"

using namespace dqca;

TEST_SUITE("params") {

TEST_CASE("massless limit") {
  const auto p = params_from_mass_ratio(0.0, 16);
  CHECK(p.zeta == 1.0);
  CHECK(p.omega == 0.0);
  CHECK(p.is_massless());
  CHECK_THROWS_AS(p.compton_wavelength(), ParameterError);
  CHECK(p.theta == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
}

TEST_CASE("maximal mass stops transport") {
  const auto p = params_from_mass_ratio(1.0, 16);
  CHECK(p.zeta == 0.0);
  CHECK(p.theta == 0.0);
  CHECK(p.compton_wavelength() == 2.0);  // lambda = 2a
  CHECK(p.mass() == p.planck_mass());
}

TEST_CASE("mu = 0.6 gives zeta = 0.8") {
  const auto p = params_from_mass_ratio(0.6, 8);
  CHECK(std::abs(p.zeta - 0.8) <= 1e-12);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(params_from_mass_ratio(-0.1, 8), ParameterError);
  CHECK_THROWS_AS(params_from_mass_ratio(1.1, 8), ParameterError);
  CHECK_THROWS_AS(params_from_mass_ratio(0.5, 1), ParameterError);
  CHECK_THROWS_AS(params_from_mass_ratio(std::nan(""), 8), ParameterError);
  PhysicalUnits bad;
  bad.a = 0.0;
  CHECK_THROWS_AS(params_from_mass_ratio(0.5, 8, bad), ParameterError);
}

TEST_CASE("pythagorean closure over random mu") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double mu = uni(rng);
    const auto p = params_from_mass_ratio(mu, 4);
    CHECK(std::abs(p.zeta * p.zeta + mu * mu - 1.0) <= 1e-12);
  }
}

TEST_CASE("unit consistency omega*tau = mu/2 in natural units") {
  for (double mu : {0.1, 0.5, 0.9}) {
    const auto p = params_from_mass_ratio(mu, 4);
    CHECK(std::abs(p.omega * p.units.tau - mu / 2.0) <= 1e-15);
  }
}

TEST_CASE("omega and compton wavelength are consistent views") {
  PhysicalUnits u;
  u.a = 0.5;
  u.tau = 0.25;
  const auto p = params_from_mass_ratio(0.4, 8, u);
  // omega = c / lambda
  CHECK(p.omega ==
        doctest::Approx(u.c() / p.compton_wavelength()).epsilon(1e-14));
}

TEST_CASE("mass conversion") {
  PhysicalUnits natural;
  CHECK(mass_conversion(0.0, natural) == 0.0);
  CHECK(mass_conversion(1.0, natural) == 1.0);

  // mu = 0.5: omega = 0.25 and m = mu * M with M = hbar/(2ac) = 0.5.
  const auto p = params_from_mass_ratio(0.5, 8);
  CHECK(p.omega == doctest::Approx(0.25).epsilon(1e-15));
  const double m = mass_conversion(p.omega, p.units);
  CHECK(m == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(p.planck_mass() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(m / p.planck_mass() == doctest::Approx(p.mu).epsilon(1e-14));
  CHECK(p.mass() == doctest::Approx(m).epsilon(1e-14));

  CHECK_THROWS_AS(mass_conversion(-1.0, natural), ParameterError);
}

TEST_CASE("mass conversion is exactly linear") {
  PhysicalUnits u;
  u.a = 0.7;
  u.tau = 0.3;
  u.hbar = 2.0;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> uni(0.0, 10.0);
  for (int i = 0; i < 50; ++i) {
    const double omega = uni(rng);
    CHECK(mass_conversion(2.0 * omega, u) == 2.0 * mass_conversion(omega, u));
  }
}

TEST_CASE("momentum grid shape") {
  const auto p4 = params_from_mass_ratio(0.0, 4);
  const auto g4 = momentum_grid(p4);
  REQUIRE(g4.size() == 4);
  const double step = std::numbers::pi / 4.0;
  CHECK(g4[0] == doctest::Approx(-step));
  CHECK(g4[1] == 0.0);
  CHECK(g4[2] == doctest::Approx(step));
  CHECK(g4[3] == doctest::Approx(2 * step));

  for (int n : {2, 3, 5, 8, 17, 64}) {
    const auto g = momentum_grid(params_from_mass_ratio(0.3, n));
    REQUIRE(static_cast<int>(g.size()) == n);
    bool has_zero = false;
    for (size_t i = 0; i < g.size(); ++i) {
      if (g[i] == 0.0) has_zero = true;
      if (i > 0) CHECK(g[i] > g[i - 1]);
      CHECK(g[i] > -std::numbers::pi / 2 - 1e-12);
      CHECK(g[i] <= std::numbers::pi / 2 + 1e-12);
    }
    CHECK(has_zero);
  }
}

TEST_CASE("bound-saturating wavenumber appears iff n divisible by 4") {
  const double k_star = std::numbers::pi / 4.0;  // pi/(4a), a = 1
  for (int n = 2; n <= 32; ++n) {
    const auto g = momentum_grid(params_from_mass_ratio(0.0, n));
    bool found = false;
    for (double k : g) {
      if (std::abs(k - k_star) <= 1e-13) found = true;
    }
    CHECK(found == (n % 4 == 0));
  }
}

TEST_CASE("units derive c and reject bad scales") {
  PhysicalUnits u;
  u.a = 3.0;
  u.tau = 1.5;
  CHECK(u.c() == 2.0);
  u.tau = -1.0;
  CHECK_THROWS_AS(u.validate(), ParameterError);
}

}  // TEST_SUITE
