// Half-space overlap integrals: branch choices, Fresnel amplitudes, and the
// quasistatic limit.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "nfrht/constants.hpp"
#include "nfrht/errors.hpp"
#include "nfrht/greens.hpp"
#include "test_util.hpp"

using namespace nfrht;
using testutil::rel_err;

namespace {

double abs2(Complex z) { return std::norm(z); }

}  // namespace

TEST_CASE("kz branch decays into the medium") {
  const double w = 1.7e14;
  const double k0 = w / constants::c;

  // Vacuum, propagating: real positive.
  const Complex a = kz_in_medium(Complex(1.0, 0.0), w, 0.5 * k0);
  CHECK(a.imag() == 0.0);
  CHECK(a.real() > 0.0);

  // Vacuum, evanescent: purely imaginary, Im > 0.
  const Complex b = kz_in_medium(Complex(1.0, 0.0), w, 2.0 * k0);
  CHECK(std::abs(b.real()) < 1e-12 * std::abs(b.imag()));
  CHECK(b.imag() > 0.0);

  // Lossy media always give Im >= 0.
  for (const Complex eps : {Complex(-2.1, 0.16), Complex(3.0, 1e-6), Complex(-5.0, 2.0)}) {
    for (double k : {0.0, 0.5 * k0, 1.5 * k0, 50.0 * k0}) {
      CHECK(kz_in_medium(eps, w, k).imag() >= 0.0);
    }
  }
}

TEST_CASE("Fresnel transmission conserves energy on a lossless interface") {
  const double w = 1.7e14;
  const double k0 = w / constants::c;
  const Complex eps(2.25, 0.0);

  for (double theta : {0.0, 0.3, 0.52, 1.0, 1.35}) {
    const double k = k0 * std::sin(theta);
    const Complex kz0 = kz_in_medium(Complex(1.0, 0.0), w, k);
    const Complex kz1 = kz_in_medium(eps, w, k);
    const FresnelTsTp t = fresnel_ts_tp(eps, w, k);

    const Complex r_s = (kz0 - kz1) / (kz0 + kz1);
    const Complex r_p = (eps * kz0 - kz1) / (eps * kz0 + kz1);
    const double flux = kz1.real() / kz0.real();
    CHECK(std::abs(abs2(r_s) + flux * abs2(t.t_s) - 1.0) < 1e-12);
    CHECK(std::abs(abs2(r_p) + flux * abs2(t.t_p) - 1.0) < 1e-12);
  }
}

TEST_CASE("normal incidence transmission matches the textbook value") {
  const double w = 1.7e14;
  const Complex eps(4.0, 0.0);
  const FresnelTsTp t = fresnel_ts_tp(eps, w, 0.0);
  CHECK(rel_err(t.t_s.real(), 2.0 / 3.0) < 1e-12);
  CHECK(rel_err(t.t_p.real(), 2.0 / 3.0) < 1e-12);
}

TEST_CASE("quasistatic closed form") {
  // Independently computed: K_xx = 1/(16 pi k0^4 z0^3 |eps+1|^2) at
  // z0 = 10 nm, omega = 1.75e14 for the default material's permittivity.
  const Complex eps(-2.086202814117607, 0.16459765600215176);
  const OverlapTensor t = quasistatic_overlap(eps, 1e-8, 1.75e14);
  CHECK(rel_err(t.k_xx, 0.14196427208704912) < 1e-12);
  CHECK(t.k_zz == 2.0 * t.k_xx);
  CHECK(t.regime == OverlapRegime::quasistatic);
  CHECK(t.err_xx == 0.0);
}

TEST_CASE("full overlap approaches the quasistatic limit in the near field") {
  const QuadratureConfig q{};
  const Complex eps(-2.086202814117607, 0.16459765600215176);
  for (double z0 : {2e-9, 5e-9, 1e-8}) {
    const OverlapTensor full = bulk_overlap(eps, z0, 1.75e14, q);
    const OverlapTensor quasi = quasistatic_overlap(eps, z0, 1.75e14);
    CHECK(rel_err(full.k_xx, quasi.k_xx) < 0.01);
    CHECK(rel_err(full.k_zz, quasi.k_zz) < 0.01);
    CHECK(rel_err(full.k_zz / full.k_xx, 2.0) < 0.02);
    CHECK(full.regime == OverlapRegime::full);
  }
}

TEST_CASE("near-field height scaling is 1/z0^3") {
  const QuadratureConfig q{};
  const Complex eps(-2.086202814117607, 0.16459765600215176);
  const OverlapTensor a = bulk_overlap(eps, 5e-9, 1.75e14, q);
  const OverlapTensor b = bulk_overlap(eps, 1e-8, 1.75e14, q);
  CHECK(rel_err(a.k_xx / b.k_xx, 8.0) < 0.01);
}

TEST_CASE("far field is height independent") {
  // Beyond the wavelength only the propagating sector survives, which does
  // not decay with height.
  const QuadratureConfig q{};
  const Complex eps(-2.086202814117607, 0.16459765600215176);
  const double w = 1.75e14;
  const OverlapTensor a = bulk_overlap(eps, 1e-3, w, q);
  const OverlapTensor b = bulk_overlap(eps, 2e-3, w, q);
  CHECK(rel_err(a.k_xx, b.k_xx) < 0.02);
  CHECK(rel_err(a.k_zz, b.k_zz) < 0.02);
}

TEST_CASE("error estimates are small and positive") {
  const QuadratureConfig q{};
  const Complex eps(-1.5, 0.8);
  const OverlapTensor t = bulk_overlap(eps, 1e-8, 1.7e14, q);
  CHECK(t.err_xx > 0.0);
  CHECK(t.err_zz > 0.0);
  CHECK(t.err_xx < 1e-4 * t.k_xx);
  CHECK(t.err_zz < 1e-4 * t.k_zz);
}

TEST_CASE("invalid arguments are rejected") {
  const QuadratureConfig q{};
  CHECK_THROWS_AS(bulk_overlap(Complex(2.0, 0.5), 1e-8, 0.0, q), std::invalid_argument);
  CHECK_THROWS_AS(bulk_overlap(Complex(2.0, 0.5), 0.0, 1e14, q), std::invalid_argument);
  CHECK_THROWS_AS(bulk_overlap(Complex(2.0, 0.0), 1e-8, 1e14, q), InvalidBulkError);
  CHECK_THROWS_AS(bulk_overlap(Complex(2.0, -0.5), 1e-8, 1e14, q), InvalidBulkError);
  CHECK_THROWS_AS(quasistatic_overlap(Complex(2.0, 0.5), 1e-8, -1.0),
                  std::invalid_argument);
}

TEST_CASE("impossible tolerance raises a convergence error") {
  QuadratureConfig q{};
  q.rel_tol = 1e-15;  // below the rounding floor of the error estimator
  q.abs_tol_floor = 0.0;
  q.max_subdivisions = 1;
  CHECK_THROWS_AS(bulk_overlap(Complex(-1.5, 0.8), 1e-8, 1.7e14, q),
                  NonConvergenceError);
}

TEST_CASE("deterministic results") {
  const QuadratureConfig q{};
  const Complex eps(-2.0, 0.3);
  const OverlapTensor a = bulk_overlap(eps, 7e-9, 1.78e14, q);
  const OverlapTensor b = bulk_overlap(eps, 7e-9, 1.78e14, q);
  CHECK(a.k_xx == b.k_xx);
  CHECK(a.k_zz == b.k_zz);
  CHECK(a.err_xx == b.err_xx);
}
