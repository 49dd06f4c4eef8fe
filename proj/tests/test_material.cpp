// Material model against independently computed reference values.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "nfrht/errors.hpp"
#include "nfrht/material.hpp"
#include "test_util.hpp"

using namespace nfrht;
using testutil::rel_err;

TEST_CASE("static and resonance limits of the default material") {
  const LorentzMaterial m = LorentzMaterial::sic();

  // eps(0) = eps_inf omega_L^2 / omega_T^2.
  const Complex e0 = eps_lorentz(m, 0.0);
  CHECK(rel_err(e0.real(), 10.002544536006155) < 1e-12);
  CHECK(e0.imag() == 0.0);

  // Im eps(omega_T) = eps_inf (omega_L^2 - omega_T^2) / (gamma omega_T).
  const Complex et = eps_lorentz(m, m.omega_T);
  CHECK(rel_err(et.imag(), 550.3011444852783) < 1e-12);
  CHECK(std::abs(et.real() - m.eps_inf) < 1e-9);

  // High-frequency limit approaches eps_inf.
  const Complex ehigh = eps_lorentz(m, 1e17);
  CHECK(rel_err(ehigh.real(), m.eps_inf) < 1e-3);
}

TEST_CASE("crossing symmetry eps(-w) = conj eps(w)") {
  const LorentzMaterial m = LorentzMaterial::sic();
  for (double w : {1e13, 1.2e14, 1.492e14, 1.75e14, 2.9e14, 8.8e15}) {
    const Complex plus = eps_lorentz(m, w);
    const Complex minus = eps_lorentz(m, -w);
    CHECK(std::abs(minus - std::conj(plus)) <= 1e-15 * std::abs(plus));
  }
}

TEST_CASE("lossless resonance roots") {
  const LorentzMaterial m = LorentzMaterial::sic();
  CHECK(rel_err(lossless_sphere_root(m), 1.752450904423229e14) < 1e-12);
  CHECK(rel_err(lossless_surface_root(m), 1.7834873287881953e14) < 1e-12);
}

TEST_CASE("resonance search hits the Re eps targets") {
  const LorentzMaterial m = LorentzMaterial::sic();
  const Resonances r = find_resonances(m);

  // Bisection reaches its width target, so Re eps is pinned at the target.
  CHECK(std::abs(eps_lorentz(m, r.omega_sphere).real() + 2.0) < 1e-6);
  CHECK(std::abs(eps_lorentz(m, r.omega_surface).real() + 1.0) < 1e-6);

  // Damping shifts the crossings only slightly off the lossless roots.
  CHECK(rel_err(r.omega_sphere, lossless_sphere_root(m)) < 1e-3);
  CHECK(rel_err(r.omega_surface, lossless_surface_root(m)) < 1e-3);
  CHECK(r.omega_surface > r.omega_sphere);

  // Absorption strength at the crossings.
  CHECK(rel_err(eps_lorentz(m, r.omega_sphere).imag(), 0.1614973493190601) < 1e-3);
}

TEST_CASE("overdamped material has no resonance crossing") {
  LorentzMaterial m = LorentzMaterial::sic();
  m.gamma = 0.5 * m.omega_T;
  CHECK_THROWS_AS(find_resonances(m), NoRootError);
}

TEST_CASE("dressing choices") {
  const LorentzMaterial m = LorentzMaterial::sic();
  const double w = 1.6e14;
  const Complex eps = eps_lorentz(m, w);
  CHECK(std::abs(chi_body(m, w, Dressing::bare) - (eps - 1.0)) == 0.0);
  CHECK(std::abs(chi_body(m, w, Dressing::clausius_mossotti) -
                 3.0 * (eps - 1.0) / (eps + 2.0)) == 0.0);

  // The Clausius-Mossotti dressing is resonant where eps approaches -2.
  const LorentzMaterial sic = LorentzMaterial::sic();
  CHECK(rel_err(chi_body(sic, lossless_sphere_root(sic), Dressing::clausius_mossotti).imag(),
                55.70925920876075) < 1e-12);
  CHECK(rel_err(chi_body(sic, lossless_surface_root(sic), Dressing::clausius_mossotti).imag(),
                1.135075144679092) < 1e-12);
}

TEST_CASE("Im chi is odd in frequency") {
  const LorentzMaterial m = LorentzMaterial::sic();
  for (double w : {5e13, 1.7e14, 3e14}) {
    for (Dressing d : {Dressing::bare, Dressing::clausius_mossotti}) {
      const Complex plus = chi_body(m, w, d);
      const Complex minus = chi_body(m, -w, d);
      CHECK(std::abs(minus.imag() + plus.imag()) <= 1e-15 * std::abs(plus.imag()));
      CHECK(std::abs(minus.real() - plus.real()) <= 1e-15 * std::abs(plus.real()));
    }
  }
}
