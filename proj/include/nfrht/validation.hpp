#pragma once

// Independent cross-checks: a brute-force real-space oracle for the
// near-field overlap, a fixed-grid reference for the power integral, and
// algebraic identities of the material model.
#include <string>
#include <vector>

#include "nfrht/greens.hpp"
#include "nfrht/material.hpp"
#include "nfrht/spectrum.hpp"

namespace nfrht {

struct OracleGrid {
  int n0 = 32;              // initial grid points per mapped dimension
  int max_refinements = 3;  // number of grid doublings to attempt
  int n_phi = 16;           // azimuthal samples (trapezoid on a periodic integrand)
  double tol = 1e-3;        // relative change accepted between refinements
};

// Near-field overlap computed the slow way: the image-screened static dipole
// field is integrated as |E|^2 over the half space on a compactified
// cylindrical grid with Richardson extrapolation across grid doublings.
// Shares no code with the wavevector-space route. Throws
// GridNotConvergedError if refinement stalls.
OverlapTensor oracle_quasistatic_overlap(Complex eps_bulk, double z0, double omega,
                                         const OracleGrid& grid = {});

// Plain trapezoid integration of the spectral density over the automatic
// window, as a reference for the adaptive integral.
double oracle_fixed_grid_power(const ScenarioConfig& sc, int n_points);

struct OracleReport {
  std::string name;
  double reference_value;
  double test_value;
  double relative_error;
  double tolerance;
  bool pass;
};

// Closed-form resonance positions, response-function identities, and
// crossing symmetry for one material.
std::vector<OracleReport> check_material_identities(const LorentzMaterial& m);

// Full suite for a scenario: material identities, oracle versus closed-form
// overlap, full versus quasistatic overlap, occupation spot checks, and the
// adaptive power integral versus the fixed grid.
std::vector<OracleReport> run_validation_suite(const ScenarioConfig& sc);

}  // namespace nfrht
