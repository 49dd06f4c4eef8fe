#pragma once

// Lorentz oscillator dielectric model and its resonances.
#include <complex>

namespace nfrht {

using Complex = std::complex<double>;

// Single-resonance Lorentz model,
//   eps(w) = eps_inf * (1 + (omega_L^2 - omega_T^2) / (omega_T^2 - w^2 - i gamma w)).
// Defaults are the silicon carbide phonon-polariton parameters.
struct LorentzMaterial {
  double eps_inf = 6.7;
  double omega_L = 1.823e14;  // longitudinal optical phonon frequency, rad/s
  double omega_T = 1.492e14;  // transverse optical phonon frequency, rad/s
  double gamma = 8.954e11;    // damping rate, rad/s

  static LorentzMaterial sic() { return {}; }
};

// How the body's microscopic response enters the dipole polarizability.
enum class Dressing {
  bare,               // chi = eps - 1
  clausius_mossotti,  // chi = 3 (eps - 1) / (eps + 2)
};

// Permittivity at angular frequency omega (rad/s). Valid for any real omega;
// negative arguments satisfy eps(-w) = conj(eps(w)) by construction.
Complex eps_lorentz(const LorentzMaterial& m, double omega);

// Body susceptibility with the chosen dressing applied.
Complex chi_body(const LorentzMaterial& m, double omega, Dressing dressing);

// Frequencies where the lossless (gamma = 0) model satisfies
// Re eps = -2 (sphere dipole resonance) and Re eps = -1 (surface resonance).
double lossless_sphere_root(const LorentzMaterial& m);
double lossless_surface_root(const LorentzMaterial& m);

struct Resonances {
  double omega_sphere;   // Re eps = -2
  double omega_surface;  // Re eps = -1
};

// Locates the Re eps = -2 and Re eps = -1 crossings of the lossy model by
// bisection to 1e-9 relative width. Throws NoRootError if no sign change
// exists between omega_T and omega_L (overdamped material).
Resonances find_resonances(const LorentzMaterial& m);

}  // namespace nfrht
