// Half-space overlap integrals over both wavevector sectors.
#include "nfrht/greens.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "nfrht/constants.hpp"
#include "nfrht/errors.hpp"

namespace nfrht {

Complex kz_in_medium(Complex eps, double omega, double k) {
  const double k0 = omega / constants::c;
  Complex kz = std::sqrt(eps * k0 * k0 - k * k);
  if (kz.imag() < 0.0) kz = -kz;
  return kz;
}

FresnelTsTp fresnel_ts_tp(Complex eps, double omega, double k) {
  const Complex kz0 = kz_in_medium(Complex(1.0, 0.0), omega, k);
  const Complex kz1 = kz_in_medium(eps, omega, k);
  FresnelTsTp t{};
  t.t_s = 2.0 * kz0 / (kz0 + kz1);
  t.t_p = 2.0 * std::sqrt(eps) * kz0 / (eps * kz0 + kz1);
  return t;
}

namespace {

inline double abs2(Complex z) {
  return z.real() * z.real() + z.imag() * z.imag();
}

// Shared integrand core for both sectors. kz1 always has Im > 0 when the
// bulk absorbs, so the 1 / Im kz1 factor (the analytically integrated decay
// into the medium) stays finite. The p-polarization denominator keeps the
// |eps kz0 + kz1|^2 form, which is regular across the light line where
// kz0 -> 0, so no polarization amplitude is ever divided by a vanishing kz0.
std::array<double, 2> overlap_core(Complex eps, double k0, double k, Complex kz0,
                                   double jac, double atten) {
  Complex kz1 = std::sqrt(eps * k0 * k0 - k * k);
  if (kz1.imag() < 0.0) kz1 = -kz1;
  const double im1 = kz1.imag();
  if (im1 <= 0.0) {
    throw InvalidBulkError("bulk absorption vanished inside overlap integrand");
  }

  const double k04 = (k0 * k0) * (k0 * k0);
  const double s_term = 1.0 / abs2(kz0 + kz1);
  const double p_shared = (abs2(kz1) + k * k) / (abs2(eps * kz0 + kz1) * k04);

  const double common = jac * atten / im1;
  constexpr double pi = constants::pi;
  std::array<double, 2> f{};
  f[0] = common / (8.0 * pi) * (s_term + abs2(kz0) * p_shared);
  f[1] = common / (4.0 * pi) * (k * k * p_shared);
  return f;
}

}  // namespace

OverlapTensor bulk_overlap(Complex eps_bulk, double z0, double omega,
                           const QuadratureConfig& q) {
  if (!(omega > 0.0)) throw std::invalid_argument("bulk_overlap requires omega > 0");
  if (!(z0 > 0.0)) throw std::invalid_argument("bulk_overlap requires z0 > 0");
  if (!(eps_bulk.imag() > 0.0)) {
    throw InvalidBulkError("bulk_overlap requires an absorbing half space (Im eps > 0)");
  }

  const double k0 = omega / constants::c;

  // Propagating sector: k = k0 sin(theta), real kz0, no height attenuation.
  auto f_prop = [&](double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double k = k0 * s;
    const Complex kz0(k0 * c, 0.0);
    const double jac = k0 * k0 * s * c;
    return overlap_core(eps_bulk, k0, k, kz0, jac, 1.0);
  };

  // Evanescent sector: k^2 = k0^2 + u^2, kz0 = i u, k dk = u du. The
  // integrand vanishes linearly at u = 0, matching the propagating sector's
  // approach to grazing incidence, so the light line is not a breakpoint.
  auto f_evan = [&](double u) {
    const double k = std::sqrt(k0 * k0 + u * u);
    const Complex kz0(0.0, u);
    return overlap_core(eps_bulk, k0, k, kz0, u, std::exp(-2.0 * u * z0));
  };

  constexpr double pi = constants::pi;
  const std::array<double, 3> prop_nodes = {0.0, 0.25 * pi, 0.5 * pi};

  const double kmax = std::max(10.0 * k0, q.k_cutoff_factor / z0);
  const double umax = std::sqrt(kmax * kmax - k0 * k0);
  std::vector<double> evan_nodes = {0.0};
  const double ustep = std::min(k0, 0.25 / z0);
  for (double u = ustep; u < umax; u *= 4.0) evan_nodes.push_back(u);
  evan_nodes.push_back(umax);

  const auto prop = quad::integrate<2>(f_prop, prop_nodes, q.rel_tol,
                                       q.abs_tol_floor, q.max_subdivisions);
  const auto evan = quad::integrate<2>(f_evan, evan_nodes, q.rel_tol,
                                       q.abs_tol_floor, q.max_subdivisions);
  if (!prop.converged || !evan.converged) {
    throw NonConvergenceError("overlap quadrature exhausted its subdivision budget");
  }

  OverlapTensor t{};
  t.k_xx = prop.value[0] + evan.value[0];
  t.k_zz = prop.value[1] + evan.value[1];
  t.err_xx = prop.error[0] + evan.error[0];
  t.err_zz = prop.error[1] + evan.error[1];
  t.regime = OverlapRegime::full;
  return t;
}

OverlapTensor quasistatic_overlap(Complex eps_bulk, double z0, double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("quasistatic_overlap requires omega > 0");
  if (!(z0 > 0.0)) throw std::invalid_argument("quasistatic_overlap requires z0 > 0");

  const double k0 = omega / constants::c;
  const double k04 = (k0 * k0) * (k0 * k0);
  const double denom = abs2(eps_bulk + 1.0);
  if (denom <= 0.0) {
    throw InvalidBulkError("quasistatic_overlap undefined at eps = -1");
  }

  OverlapTensor t{};
  t.k_xx = 1.0 / (16.0 * constants::pi * k04 * z0 * z0 * z0 * denom);
  t.k_zz = 2.0 * t.k_xx;
  t.err_xx = 0.0;
  t.err_zz = 0.0;
  t.regime = OverlapRegime::quasistatic;
  return t;
}

}  // namespace nfrht
