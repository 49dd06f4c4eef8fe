#pragma once

// Spectral density of the radiative power a particle absorbs from the
// thermally excited half space below it, and its frequency integral.
#include "nfrht/greens.hpp"
#include "nfrht/material.hpp"
#include "nfrht/quadrature.hpp"
#include "nfrht/rotor.hpp"

namespace nfrht {

// Everything needed to evaluate one physical scenario.
struct ScenarioConfig {
  ParticleSpec particle{};
  LorentzMaterial bulk_material{};
  double bulk_temperature = 300.0;  // K
  QuadratureConfig quadrature{};
  double omega_window_min = 0.0;  // both zero: choose the window automatically
  double omega_window_max = 0.0;
  bool near_field = false;  // replace the full overlap with its quasistatic limit
};

struct Window {
  double omega_min;
  double omega_max;
};

// Explicit window when configured, otherwise wide enough to cover both the
// thermal tail and the material resonances.
Window omega_window(const ScenarioConfig& sc);

// Bose-Einstein occupation with a series fallback for small arguments.
double planck_occupation(double omega, double temperature);

struct SpectralResult {
  double omega;           // rad/s
  double power_density;   // W s, power per unit angular frequency
  double error_estimate;  // from the overlap quadrature, same units
};

SpectralResult spectral_power_density(const ScenarioConfig& sc, double omega);

struct TotalPower {
  double power;            // W
  double error_estimate;   // outer quadrature error plus integrated inner error
  double negative_power;   // sum of negative panel contributions (rotational gain)
  bool converged;
};

// Frequency integral of the spectral density over the window. Material
// resonances and rotational sidebands are seeded as panel breakpoints. A
// blown subdivision budget is reported through `converged`, not thrown.
TotalPower total_power(const ScenarioConfig& sc);

}  // namespace nfrht
