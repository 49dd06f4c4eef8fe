#pragma once

// Field-overlap integrals between a point dipole at height z0 and the
// absorbing half space below it, resolved by lateral wavevector and summed
// over both polarizations. These carry the full geometry dependence of the
// energy exchange; the particle response multiplies them in spectrum.cpp.
#include <complex>

#include "nfrht/material.hpp"
#include "nfrht/quadrature.hpp"

namespace nfrht {

enum class OverlapRegime {
  full,         // propagating plus evanescent sectors, retardation kept
  quasistatic,  // closed-form near-field limit
};

// Direction-resolved overlap integrals K_xx (= K_yy) and K_zz, in meters.
struct OverlapTensor {
  double k_xx;
  double k_zz;
  OverlapRegime regime;
  double err_xx;  // propagated quadrature error estimates
  double err_zz;
};

// Normal wavevector component inside a medium of permittivity eps at lateral
// wavevector k, branch chosen so Im kz >= 0 (decay into the medium).
Complex kz_in_medium(Complex eps, double omega, double k);

// Interface transmission amplitudes (E-field convention) from vacuum into the
// medium, for lateral wavevector k.
struct FresnelTsTp {
  Complex t_s;
  Complex t_p;
};

FresnelTsTp fresnel_ts_tp(Complex eps, double omega, double k);

// Full overlap tensor by adaptive quadrature over the propagating sector
// (angle parametrization) and the evanescent sector (decay-constant
// parametrization, cut off at max(10 omega/c, k_cutoff_factor / z0)).
// Requires Im eps_bulk > 0; throws InvalidBulkError otherwise and
// NonConvergenceError if the quadrature budget is exhausted.
OverlapTensor bulk_overlap(Complex eps_bulk, double z0, double omega,
                           const QuadratureConfig& q);

// Closed-form near-field limit, valid for z0 << c/omega:
//   K_xx = 1 / (16 pi k0^4 z0^3 |eps+1|^2),  K_zz = 2 K_xx.
OverlapTensor quasistatic_overlap(Complex eps_bulk, double z0, double omega);

}  // namespace nfrht
