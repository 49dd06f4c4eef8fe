// Spectral density assembly, occupation factors, and the power integral.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "nfrht/constants.hpp"
#include "nfrht/errors.hpp"
#include "nfrht/spectrum.hpp"
#include "nfrht/validation.hpp"
#include "test_util.hpp"

using namespace nfrht;
using testutil::rel_err;

TEST_CASE("planck occupation reference values") {
  // Independently computed at the surface resonance anchor and 300 K.
  CHECK(rel_err(planck_occupation(1.783e14, 300.0), 0.01079230667902166) < 1e-12);

  // hbar omega = kT ln 2 gives exactly one quantum of occupation.
  const double w = std::log(2.0) * constants::k_B * 300.0 / constants::hbar;
  CHECK(rel_err(planck_occupation(w, 300.0), 1.0) < 1e-12);

  // Both sides of the series switchover agree with the exact formula.
  const double t = 300.0;
  for (double x : {0.9999999e-6, 1.0000001e-6}) {
    const double w = x * constants::k_B * t / constants::hbar;
    const double x_back = constants::hbar * w / (constants::k_B * t);
    CHECK(rel_err(planck_occupation(w, t), 1.0 / std::expm1(x_back)) < 1e-12);
  }

  // Extreme arguments underflow benignly to zero occupation.
  CHECK(planck_occupation(1e20, 1.0) == 0.0);

  CHECK(planck_occupation(1e14, 0.0) == 0.0);
  CHECK(planck_occupation(1e14, -5.0) == 0.0);
  CHECK_THROWS_AS(planck_occupation(0.0, 300.0), std::invalid_argument);
  CHECK_THROWS_AS(planck_occupation(-1e14, 300.0), std::invalid_argument);
}

TEST_CASE("automatic window covers thermal tail and resonances") {
  ScenarioConfig sc{};
  const Window w = omega_window(sc);
  CHECK(rel_err(w.omega_min, 1.492e11) < 1e-12);
  CHECK(rel_err(w.omega_max, 2.3565661057297155e15) < 1e-12);

  // At low temperature the resonance coverage floor takes over.
  sc.bulk_temperature = 10.0;
  const Window wc = omega_window(sc);
  CHECK(rel_err(wc.omega_max, 3.0 * sc.bulk_material.omega_L) < 1e-12);

  sc.omega_window_min = 1e14;
  sc.omega_window_max = 2e14;
  const Window we = omega_window(sc);
  CHECK(we.omega_min == 1e14);
  CHECK(we.omega_max == 2e14);
}

TEST_CASE("spectral density assembles its factors") {
  ScenarioConfig sc{};
  const double w = 1.76e14;
  const SpectralResult r = spectral_power_density(sc, w);
  CHECK(r.omega == w);
  CHECK(r.power_density > 0.0);
  CHECK(r.error_estimate > 0.0);
  CHECK(r.error_estimate < 1e-3 * r.power_density);

  // Manual reassembly from the factor functions.
  const Complex eps_b = eps_lorentz(sc.bulk_material, w);
  const PolarizabilityIm a = polarizability_im(sc.particle, w);
  const OverlapTensor k =
      bulk_overlap(eps_b, sc.particle.height_z0, w, sc.quadrature);
  const double pre = (2.0 * constants::hbar / constants::pi) * std::pow(w, 5.0) /
                     std::pow(constants::c, 4.0);
  const double expected = pre * ((a.xx + a.yy) * k.k_xx + a.zz * k.k_zz) *
                          eps_b.imag() * planck_occupation(w, sc.bulk_temperature);
  CHECK(rel_err(r.power_density, expected) < 1e-12);
}

TEST_CASE("transparent bulk exchanges no power") {
  ScenarioConfig sc{};
  sc.bulk_material.gamma = 0.0;  // lossless Lorentz model: Im eps = 0 off resonance
  const SpectralResult r = spectral_power_density(sc, 1.6e14);
  CHECK(r.power_density == 0.0);
  CHECK(r.error_estimate == 0.0);
}

TEST_CASE("near-field evaluation path stays close to the full one") {
  ScenarioConfig sc{};
  ScenarioConfig nf = sc;
  nf.near_field = true;
  for (double w : {1.7e14, 1.75e14, 1.8e14}) {
    const double full = spectral_power_density(sc, w).power_density;
    const double quasi = spectral_power_density(nf, w).power_density;
    CHECK(rel_err(quasi, full) < 0.01);
  }
}

TEST_CASE("density rejects non-positive frequency") {
  ScenarioConfig sc{};
  CHECK_THROWS_AS(spectral_power_density(sc, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(spectral_power_density(sc, -1e14), std::invalid_argument);
}

TEST_CASE("stationary spectral density is non-negative across the window") {
  ScenarioConfig sc{};
  for (double w : {2e11, 1e13, 1.4e14, 1.55e14, 1.752e14, 1.783e14, 2.1e14, 1e15}) {
    CHECK(spectral_power_density(sc, w).power_density >= 0.0);
  }
}

TEST_CASE("total power converges and matches a dense fixed grid") {
  ScenarioConfig sc{};
  const TotalPower p = total_power(sc);
  CHECK(p.converged);
  CHECK(p.power > 0.0);
  CHECK(p.negative_power == 0.0);
  CHECK(p.error_estimate > 0.0);
  CHECK(p.error_estimate < 1e-3 * p.power);

  // The spectral density is smooth with flat tails, so a dense trapezoid is
  // a sharp external reference; the adaptive result must sit within a few
  // reported error bars of it.
  const double reference = oracle_fixed_grid_power(sc, 20000);
  CHECK(std::abs(p.power - reference) <= 3.0 * p.error_estimate);
}

TEST_CASE("rotating scenario still integrates cleanly") {
  ScenarioConfig sc{};
  sc.particle.omega0 = 1e13;
  const TotalPower p = total_power(sc);
  CHECK(p.converged);
  CHECK(p.power > 0.0);
  CHECK(p.negative_power <= 0.0);
  CHECK(std::abs(p.negative_power) < 0.1 * p.power);
}

TEST_CASE("explicit window restricts the integral") {
  ScenarioConfig sc{};
  sc.omega_window_min = 1.6e14;
  sc.omega_window_max = 1.9e14;
  const TotalPower banded = total_power(sc);
  sc.omega_window_min = 0.0;
  sc.omega_window_max = 0.0;
  const TotalPower full = total_power(sc);
  CHECK(banded.converged);
  CHECK(banded.power < full.power);
  CHECK(banded.power > 0.5 * full.power);  // the band carries most of the power
}

TEST_CASE("unreachable tolerance is reported through the converged flag") {
  ScenarioConfig sc{};
  sc.near_field = true;  // keep the inner overlap closed-form so only the
                         // frequency integral can fail
  sc.quadrature.rel_tol = 1e-15;
  sc.quadrature.abs_tol_floor = 0.0;
  sc.quadrature.max_subdivisions = 1;
  const TotalPower p = total_power(sc);
  CHECK_FALSE(p.converged);
  CHECK(std::isfinite(p.power));
}
