// Spectral density assembly and the frequency integral.
#include "nfrht/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "nfrht/constants.hpp"
#include "nfrht/errors.hpp"

namespace nfrht {

Window omega_window(const ScenarioConfig& sc) {
  if (sc.omega_window_min > 0.0 && sc.omega_window_max > 0.0) {
    return {sc.omega_window_min, sc.omega_window_max};
  }
  const double lo = 1e-3 * sc.bulk_material.omega_T;
  const double thermal = 60.0 * constants::k_B * sc.bulk_temperature / constants::hbar;
  const double hi = std::max(thermal, 3.0 * sc.bulk_material.omega_L);
  return {lo, hi};
}

double planck_occupation(double omega, double temperature) {
  if (!(omega > 0.0)) {
    throw std::invalid_argument("planck_occupation requires omega > 0");
  }
  if (temperature <= 0.0) return 0.0;
  const double x = constants::hbar * omega / (constants::k_B * temperature);
  if (x < 1e-6) return 1.0 / x - 0.5 + x / 12.0;
  return 1.0 / std::expm1(x);
}

SpectralResult spectral_power_density(const ScenarioConfig& sc, double omega) {
  if (!(omega > 0.0)) {
    throw std::invalid_argument("spectral_power_density requires omega > 0");
  }

  SpectralResult r{};
  r.omega = omega;

  const Complex eps_b = eps_lorentz(sc.bulk_material, omega);
  const double im_chi_b = eps_b.imag();  // bare bulk susceptibility, eps - 1
  if (im_chi_b == 0.0) return r;         // transparent bulk exchanges no power

  const PolarizabilityIm a = polarizability_im(sc.particle, omega);
  const OverlapTensor k =
      sc.near_field
          ? quasistatic_overlap(eps_b, sc.particle.height_z0, omega)
          : bulk_overlap(eps_b, sc.particle.height_z0, omega, sc.quadrature);

  const double w2 = omega * omega;
  const double c2 = constants::c * constants::c;
  const double prefactor = (2.0 * constants::hbar / constants::pi) * w2 * w2 *
                           omega / (c2 * c2);
  const double occupation = planck_occupation(omega, sc.bulk_temperature);
  const double transverse = a.xx + a.yy;

  r.power_density = prefactor * (transverse * k.k_xx + a.zz * k.k_zz) *
                    im_chi_b * occupation;
  r.error_estimate = prefactor *
                     (std::abs(transverse) * k.err_xx + std::abs(a.zz) * k.err_zz) *
                     std::abs(im_chi_b) * occupation;
  return r;
}

namespace {

// Frequencies where the integrand has structure, clamped into the window.
std::vector<double> integration_nodes(const ScenarioConfig& sc, const Window& w) {
  std::vector<double> marks;
  auto push = [&](double x) {
    if (x > w.omega_min && x < w.omega_max) marks.push_back(x);
  };

  for (const LorentzMaterial* m : {&sc.particle.material, &sc.bulk_material}) {
    push(m->omega_T);
    push(m->omega_L);
  }

  std::vector<double> resonance_marks;
  try {
    const Resonances rp = find_resonances(sc.particle.material);
    resonance_marks.push_back(rp.omega_sphere);
  } catch (const NoRootError&) {
  }
  try {
    const Resonances rb = find_resonances(sc.bulk_material);
    resonance_marks.push_back(rb.omega_surface);
  } catch (const NoRootError&) {
  }
  for (double r : resonance_marks) {
    push(r);
    // Fast rotation splits the particle response into sidebands.
    if (sc.particle.omega0 > sc.particle.material.gamma) {
      push(r - sc.particle.omega0);
      push(r + sc.particle.omega0);
    }
  }

  marks.push_back(w.omega_min);
  marks.push_back(w.omega_max);
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());

  // Keep consecutive nodes within a factor of 8 so no seed panel spans
  // several decades of smooth but curved integrand.
  std::vector<double> nodes;
  nodes.push_back(marks.front());
  for (std::size_t i = 1; i < marks.size(); ++i) {
    const double a = marks[i - 1];
    const double b = marks[i];
    if (b / a > 8.0) {
      const int extra = static_cast<int>(std::ceil(std::log(b / a) / std::log(8.0))) - 1;
      for (int j = 1; j <= extra; ++j) {
        nodes.push_back(a * std::pow(b / a, static_cast<double>(j) / (extra + 1)));
      }
    }
    nodes.push_back(b);
  }
  return nodes;
}

}  // namespace

TotalPower total_power(const ScenarioConfig& sc) {
  const Window w = omega_window(sc);
  const std::vector<double> nodes = integration_nodes(sc, w);

  auto f = [&](double omega) {
    const SpectralResult r = spectral_power_density(sc, omega);
    return std::array<double, 2>{r.power_density, r.error_estimate};
  };

  const auto res =
      quad::integrate<2>(f, nodes, sc.quadrature.rel_tol, sc.quadrature.abs_tol_floor,
                         sc.quadrature.max_subdivisions, 1);

  TotalPower p{};
  p.power = res.value[0];
  p.error_estimate = res.error[0] + res.value[1];
  for (const auto& panel : res.panels) {
    if (panel.value[0] < 0.0) p.negative_power += panel.value[0];
  }
  p.converged = res.converged;
  return p;
}

}  // namespace nfrht
