#pragma once

// Parameter sweeps over the scenario: which quantity varies, how the grid is
// built, and the resulting labeled series.
#include <cstddef>
#include <string>
#include <vector>

#include "nfrht/spectrum.hpp"

namespace nfrht {

enum class SweepKind {
  spectrum,         // spectral density vs lab frequency
  power_vs_z0,      // total power vs particle height
  power_vs_omega0,  // total power vs rotation rate
  density,          // spectral density at a fixed frequency vs rotation rate
};

enum class GridSpacing { linear, log };

struct SweepSpec {
  SweepKind kind = SweepKind::spectrum;
  double min = 1.5e14;
  double max = 1.9e14;
  int count = 400;
  GridSpacing spacing = GridSpacing::linear;
  double at_omega = 0.0;  // density sweeps: evaluation frequency, 0 = resolve later
};

// Grid and evaluation-frequency defaults appropriate to each sweep kind.
SweepSpec default_sweep(SweepKind kind);

struct SweepRow {
  double x;
  double value;
  double error_estimate;
  bool failed;
};

struct SweepSeries {
  std::string abscissa_name;
  std::string abscissa_units;
  std::string value_name;
  std::string value_units;
  std::string title;
  std::vector<std::string> metadata;  // resolved configuration, one line each
  std::vector<SweepRow> rows;

  std::size_t failed_count() const;
};

// Endpoint-exact linear or logarithmic grid.
std::vector<double> make_grid(double min, double max, int count, GridSpacing spacing);

// Evaluates the sweep on a worker pool (workers <= 0 picks the hardware
// concurrency). Rows are written by index, so the result is identical for
// any worker count. A numerical failure marks its row and the sweep
// continues; any other exception aborts and rethrows.
SweepSeries run_sweep(const SweepSpec& spec, const ScenarioConfig& scenario,
                      int workers = 0);

}  // namespace nfrht
