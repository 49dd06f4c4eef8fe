// Brute-force oracles and the validation suite.
#include "nfrht/validation.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "nfrht/constants.hpp"
#include "nfrht/errors.hpp"

namespace nfrht {

namespace {

struct DirectionalSums {
  double j_xx;  // integral of (3 n_x^2 + 1) / s^6 over the half space
  double j_zz;  // integral of (3 n_z^2 + 1) / s^6
};

// Midpoint rule over the compactified (xi, zeta) unit square with an n_phi
// point trapezoid in azimuth. rho = z0 xi/(1-xi) spans the lateral
// half-plane, depth = z0 zeta/(1-zeta) spans the interior of the bulk.
DirectionalSums half_space_field_sums(double z0, int n, int n_phi) {
  DirectionalSums sums{0.0, 0.0};
  const double dphi = 2.0 * constants::pi / n_phi;
  const double h = 1.0 / n;

  for (int iz = 0; iz < n; ++iz) {
    const double zeta = (iz + 0.5) * h;
    const double depth = z0 * zeta / (1.0 - zeta);
    const double jac_z = z0 / ((1.0 - zeta) * (1.0 - zeta));
    const double dz = -(z0 + depth);  // separation along z, dipole above

    for (int ix = 0; ix < n; ++ix) {
      const double xi = (ix + 0.5) * h;
      const double rho = z0 * xi / (1.0 - xi);
      const double jac_r = z0 / ((1.0 - xi) * (1.0 - xi));
      const double weight = rho * jac_r * jac_z * h * h * dphi;

      for (int ip = 0; ip < n_phi; ++ip) {
        const double phi = (ip + 0.5) * dphi;
        const double sx = rho * std::cos(phi);
        const double sy = rho * std::sin(phi);
        const double s2 = sx * sx + sy * sy + dz * dz;
        const double s = std::sqrt(s2);
        const double nx = sx / s;
        const double ny = sy / s;
        const double nz = dz / s;
        const double inv_s6 = 1.0 / (s2 * s2 * s2);

        // Squared Cartesian components of the unit-dipole field
        // E_k = (3 n_k n_i - delta_ki) / s^3 for source orientations
        // i = x and i = z, summed over k.
        double fx = 0.0;
        double fz = 0.0;
        const double comps_x[3] = {3.0 * nx * nx - 1.0, 3.0 * ny * nx, 3.0 * nz * nx};
        const double comps_z[3] = {3.0 * nx * nz, 3.0 * ny * nz, 3.0 * nz * nz - 1.0};
        for (int k = 0; k < 3; ++k) {
          fx += comps_x[k] * comps_x[k];
          fz += comps_z[k] * comps_z[k];
        }
        sums.j_xx += weight * fx * inv_s6;
        sums.j_zz += weight * fz * inv_s6;
      }
    }
  }
  return sums;
}

double abs2(Complex z) { return z.real() * z.real() + z.imag() * z.imag(); }

}  // namespace

OverlapTensor oracle_quasistatic_overlap(Complex eps_bulk, double z0, double omega,
                                         const OracleGrid& grid) {
  if (!(omega > 0.0)) {
    throw std::invalid_argument("oracle_quasistatic_overlap requires omega > 0");
  }
  if (!(z0 > 0.0)) {
    throw std::invalid_argument("oracle_quasistatic_overlap requires z0 > 0");
  }
  const double denom = abs2(eps_bulk + 1.0);
  if (denom <= 0.0) {
    throw InvalidBulkError("oracle_quasistatic_overlap undefined at eps = -1");
  }

  // Richardson extrapolation across doublings of the midpoint grid. The
  // midpoint rule is second order, so R = (4 I_2n - I_n) / 3.
  int n = grid.n0;
  DirectionalSums coarse = half_space_field_sums(z0, n, grid.n_phi);
  double rxx_prev = 0.0;
  double rzz_prev = 0.0;
  bool have_prev = false;
  double rxx = 0.0;
  double rzz = 0.0;
  double err_xx = 0.0;
  double err_zz = 0.0;
  bool converged = false;

  for (int level = 0; level < grid.max_refinements; ++level) {
    n *= 2;
    const DirectionalSums fine = half_space_field_sums(z0, n, grid.n_phi);
    rxx = (4.0 * fine.j_xx - coarse.j_xx) / 3.0;
    rzz = (4.0 * fine.j_zz - coarse.j_zz) / 3.0;
    err_xx = std::abs(rxx - fine.j_xx);
    err_zz = std::abs(rzz - fine.j_zz);
    if (have_prev && std::abs(rxx - rxx_prev) <= grid.tol * std::abs(rxx) &&
        std::abs(rzz - rzz_prev) <= grid.tol * std::abs(rzz)) {
      converged = true;
      break;
    }
    rxx_prev = rxx;
    rzz_prev = rzz;
    have_prev = true;
    coarse = fine;
  }
  if (!converged) {
    throw GridNotConvergedError(
        "oracle half-space grid did not settle within its refinement budget");
  }

  // The transmitted static potential is the vacuum dipole potential scaled by
  // 2/(eps+1), so the absorbed-power overlap is |2/(eps+1)|^2 J / (16 pi^2 k0^4).
  const double k0 = omega / constants::c;
  const double k04 = (k0 * k0) * (k0 * k0);
  const double scale = (4.0 / denom) / (16.0 * constants::pi * constants::pi * k04);

  OverlapTensor t{};
  t.k_xx = scale * rxx;
  t.k_zz = scale * rzz;
  t.err_xx = scale * err_xx;
  t.err_zz = scale * err_zz;
  t.regime = OverlapRegime::quasistatic;
  return t;
}

double oracle_fixed_grid_power(const ScenarioConfig& sc, int n_points) {
  if (n_points < 2) {
    throw std::invalid_argument("oracle_fixed_grid_power requires at least 2 points");
  }
  const Window w = omega_window(sc);
  const double h = (w.omega_max - w.omega_min) / (n_points - 1);
  double sum = 0.0;
  for (int i = 0; i < n_points; ++i) {
    const double omega = w.omega_min + h * i;
    const double weight = (i == 0 || i == n_points - 1) ? 0.5 : 1.0;
    sum += weight * spectral_power_density(sc, omega).power_density;
  }
  return sum * h;
}

namespace {

OracleReport make_report(const std::string& name, double reference, double test,
                         double tolerance) {
  OracleReport r{};
  r.name = name;
  r.reference_value = reference;
  r.test_value = test;
  const double scale = std::max(std::abs(reference), 1e-300);
  r.relative_error = std::abs(test - reference) / scale;
  r.tolerance = tolerance;
  r.pass = r.relative_error <= tolerance;
  return r;
}

}  // namespace

std::vector<OracleReport> check_material_identities(const LorentzMaterial& m) {
  std::vector<OracleReport> reports;

  // Damping shifts the Re eps crossings away from the lossless closed forms
  // by O((gamma omega / (omega_T^2 - omega^2))^2).
  try {
    const Resonances r = find_resonances(m);
    reports.push_back(make_report("sphere resonance vs lossless closed form",
                                  lossless_sphere_root(m), r.omega_sphere, 1e-3));
    reports.push_back(make_report("surface resonance vs lossless closed form",
                                  lossless_surface_root(m), r.omega_surface, 1e-3));
  } catch (const NoRootError&) {
    OracleReport r{};
    r.name = "resonance search (no crossing found)";
    r.pass = false;
    r.tolerance = 0.0;
    reports.push_back(r);
  }

  // Im[(eps-1)/(eps+1)] = 2 Im eps / |eps+1|^2 for any complex eps; checked
  // at randomized frequencies with a fixed seed.
  std::mt19937_64 rng(0x5eed5eed);
  std::uniform_real_distribution<double> dist(0.5 * m.omega_T, 1.5 * m.omega_L);
  double worst_identity = 0.0;
  double worst_crossing = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double w = dist(rng);
    const Complex eps = eps_lorentz(m, w);
    const Complex mirror = (eps - 1.0) / (eps + 1.0);
    const double direct = 2.0 * eps.imag() / abs2(eps + 1.0);
    const double scale = std::max(std::abs(direct), 1e-300);
    worst_identity = std::max(worst_identity, std::abs(mirror.imag() - direct) / scale);

    const Complex conj_there = std::conj(eps_lorentz(m, -w));
    worst_crossing =
        std::max(worst_crossing, std::abs(conj_there - eps) / std::abs(eps));
  }
  OracleReport identity{};
  identity.name = "surface response identity at random frequencies";
  identity.reference_value = 0.0;
  identity.test_value = worst_identity;
  identity.relative_error = worst_identity;
  identity.tolerance = 1e-12;
  identity.pass = worst_identity <= identity.tolerance;
  reports.push_back(identity);

  OracleReport crossing{};
  crossing.name = "crossing symmetry eps(-w) = conj eps(w)";
  crossing.reference_value = 0.0;
  crossing.test_value = worst_crossing;
  crossing.relative_error = worst_crossing;
  crossing.tolerance = 1e-15;
  crossing.pass = worst_crossing <= crossing.tolerance;
  reports.push_back(crossing);

  return reports;
}

std::vector<OracleReport> run_validation_suite(const ScenarioConfig& sc) {
  std::vector<OracleReport> reports = check_material_identities(sc.bulk_material);

  const double omega_probe = lossless_sphere_root(sc.bulk_material);
  const Complex eps_probe = eps_lorentz(sc.bulk_material, omega_probe);
  const double z0 = sc.particle.height_z0;

  const OverlapTensor closed = quasistatic_overlap(eps_probe, z0, omega_probe);
  const OverlapTensor oracle = oracle_quasistatic_overlap(eps_probe, z0, omega_probe);
  reports.push_back(make_report("real-space oracle K_xx vs closed form", closed.k_xx,
                                oracle.k_xx, 5e-3));
  reports.push_back(make_report("real-space oracle K_zz vs closed form", closed.k_zz,
                                oracle.k_zz, 5e-3));
  reports.push_back(
      make_report("near-field anisotropy K_zz / K_xx", 2.0,
                  oracle.k_zz / oracle.k_xx, 2e-2));

  const double z0_near = std::min(z0, 1e-8);
  const OverlapTensor full =
      bulk_overlap(eps_probe, z0_near, omega_probe, sc.quadrature);
  const OverlapTensor quasi = quasistatic_overlap(eps_probe, z0_near, omega_probe);
  reports.push_back(make_report("full overlap vs quasistatic in the near field",
                                quasi.k_xx, full.k_xx, 2e-2));

  const OverlapTensor full_2x =
      bulk_overlap(eps_probe, 2.0 * z0_near, omega_probe, sc.quadrature);
  reports.push_back(make_report("near-field height scaling K_xx(z0)/K_xx(2 z0)", 8.0,
                                full.k_xx / full_2x.k_xx, 5e-2));

  const double omega_ln2 =
      std::log(2.0) * constants::k_B * sc.bulk_temperature / constants::hbar;
  reports.push_back(make_report("occupation at hbar omega = kT ln 2", 1.0,
                                planck_occupation(omega_ln2, sc.bulk_temperature),
                                1e-12));

  const TotalPower adaptive = total_power(sc);
  const double fixed = oracle_fixed_grid_power(sc, 20000);
  OracleReport tp = make_report("adaptive power integral vs fixed grid", fixed,
                                adaptive.power, 1e-3);
  if (!adaptive.converged) tp.pass = false;
  reports.push_back(tp);

  return reports;
}

}  // namespace nfrht
