#pragma once

// Physical constants (CODATA 2018 / exact SI definitions). Everything in the
// library is strict SI; angular frequencies are rad/s throughout.
namespace nfrht::constants {

inline constexpr double c = 299792458.0;          // speed of light, m/s
inline constexpr double hbar = 1.054571817e-34;   // reduced Planck constant, J s
inline constexpr double k_B = 1.380649e-23;       // Boltzmann constant, J/K
inline constexpr double eps0 = 8.8541878128e-12;  // vacuum permittivity, F/m
inline constexpr double mu0 = 1.25663706212e-6;   // vacuum permeability, N/A^2

inline constexpr double pi = 3.14159265358979323846264338327950288;

}  // namespace nfrht::constants
