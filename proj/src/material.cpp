// Lorentz model evaluation and resonance location.
#include "nfrht/material.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "nfrht/errors.hpp"

namespace nfrht {

Complex eps_lorentz(const LorentzMaterial& m, double omega) {
  const double wl2 = m.omega_L * m.omega_L;
  const double wt2 = m.omega_T * m.omega_T;
  const Complex den(wt2 - omega * omega, -m.gamma * omega);
  return m.eps_inf * (1.0 + (wl2 - wt2) / den);
}

Complex chi_body(const LorentzMaterial& m, double omega, Dressing dressing) {
  const Complex eps = eps_lorentz(m, omega);
  switch (dressing) {
    case Dressing::bare:
      return eps - 1.0;
    case Dressing::clausius_mossotti:
      return 3.0 * (eps - 1.0) / (eps + 2.0);
  }
  return {};
}

double lossless_sphere_root(const LorentzMaterial& m) {
  const double wl2 = m.omega_L * m.omega_L;
  const double wt2 = m.omega_T * m.omega_T;
  return std::sqrt((m.eps_inf * wl2 + 2.0 * wt2) / (m.eps_inf + 2.0));
}

double lossless_surface_root(const LorentzMaterial& m) {
  const double wl2 = m.omega_L * m.omega_L;
  const double wt2 = m.omega_T * m.omega_T;
  return std::sqrt((m.eps_inf * wl2 + wt2) / (m.eps_inf + 1.0));
}

namespace {

// Bisection on f(w) = Re eps(w) - target. Starts from a bracket around the
// lossless root; if damping has shifted the crossing outside that bracket,
// falls back to a uniform scan of (omega_T, omega_L).
double solve_re_eps(const LorentzMaterial& m, double target, double guess,
                    const std::string& label) {
  auto f = [&](double w) { return eps_lorentz(m, w).real() - target; };

  double lo = guess * 0.95;
  double hi = guess * 1.05;
  if (!(f(lo) > 0.0 && f(hi) < 0.0) && !(f(lo) < 0.0 && f(hi) > 0.0)) {
    const double wmin = m.omega_T * (1.0 + 1e-9);
    const double wmax = m.omega_L;
    const int n = 512;
    bool found = false;
    double prev_w = wmin;
    double prev_f = f(wmin);
    for (int i = 1; i <= n; ++i) {
      const double w = wmin + (wmax - wmin) * static_cast<double>(i) / n;
      const double fw = f(w);
      if ((prev_f > 0.0 && fw < 0.0) || (prev_f < 0.0 && fw > 0.0)) {
        lo = prev_w;
        hi = w;
        found = true;
        break;
      }
      prev_w = w;
      prev_f = fw;
    }
    if (!found) {
      throw NoRootError("no Re eps = " + std::to_string(target) +
                        " crossing between omega_T and omega_L (" + label + ")");
    }
  }

  double flo = f(lo);
  while ((hi - lo) > 1e-9 * hi) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if ((flo > 0.0) == (fmid > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

Resonances find_resonances(const LorentzMaterial& m) {
  Resonances r{};
  r.omega_sphere = solve_re_eps(m, -2.0, lossless_sphere_root(m), "sphere resonance");
  r.omega_surface = solve_re_eps(m, -1.0, lossless_surface_root(m), "surface resonance");
  return r;
}

}  // namespace nfrht
