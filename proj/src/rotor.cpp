// Lab-frame susceptibility of a particle rotating about the surface normal.
#include "nfrht/rotor.hpp"

namespace nfrht {

LabSusceptibilityTensor lab_susceptibility(const ParticleSpec& p, double omega, int m) {
  const double shift = static_cast<double>(m) * p.omega0;
  const Complex cp = chi_body(p.material, omega + p.omega0 - shift, p.dressing);
  const Complex cm = chi_body(p.material, omega - p.omega0 - shift, p.dressing);

  LabSusceptibilityTensor t{};
  t.omega = omega;
  t.m = m;
  t.zz = chi_body(p.material, omega - shift, p.dressing);
  t.xx = 0.5 * (cp + cm);
  t.yy = t.xx;
  // Transverse circular components differ by the rotation sense, leaving an
  // antisymmetric off-diagonal part that vanishes as omega0 -> 0.
  t.xy = Complex(0.0, -0.5) * (cp - cm);
  t.yx = -t.xy;
  return t;
}

PolarizabilityIm polarizability_im(const ParticleSpec& p, double omega) {
  const LabSusceptibilityTensor t = lab_susceptibility(p, omega, 0);
  const double v = particle_volume(p);
  PolarizabilityIm a{};
  a.xx = v * t.xx.imag();
  a.yy = v * t.yy.imag();
  a.zz = v * t.zz.imag();
  a.xy = v * t.xy.imag();
  a.yx = v * t.yx.imag();
  return a;
}

}  // namespace nfrht
