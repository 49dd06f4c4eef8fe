#pragma once

// Spinning-dipole response: the particle's susceptibility as seen from the
// lab frame, frequency-shifted by the rotation rate.
#include "nfrht/material.hpp"

namespace nfrht {

struct ParticleSpec {
  double radius_a = 5e-9;    // particle radius, m
  double height_z0 = 10e-9;  // center height above the interface, m
  double omega0 = 0.0;       // rotation rate about the surface normal, rad/s
  LorentzMaterial material{};
  Dressing dressing = Dressing::clausius_mossotti;
};

inline double particle_volume(const ParticleSpec& p) {
  constexpr double four_thirds_pi = 4.18879020478639098;
  return four_thirds_pi * p.radius_a * p.radius_a * p.radius_a;
}

// Lab-frame susceptibility tensor components for sideband index m at lab
// frequency omega. Rotation about z mixes the transverse components at
// omega -+ omega0 while zz stays unmixed.
struct LabSusceptibilityTensor {
  Complex xx;
  Complex yy;
  Complex zz;
  Complex xy;
  Complex yx;
  double omega;
  int m;
};

LabSusceptibilityTensor lab_susceptibility(const ParticleSpec& p, double omega, int m);

// Imaginary (absorptive) part of the dipole polarizability tensor,
// alpha = V * chi, evaluated for the stationary sideband m = 0.
struct PolarizabilityIm {
  double xx;
  double yy;
  double zz;
  double xy;
  double yx;
};

PolarizabilityIm polarizability_im(const ParticleSpec& p, double omega);

}  // namespace nfrht
