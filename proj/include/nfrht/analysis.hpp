#pragma once

// Post-processing of sweep series: power-law slopes and peak extraction.
#include <vector>

#include "nfrht/sweep.hpp"

namespace nfrht {

struct SlopeFit {
  double slope;
  double std_error;
};

// Least-squares slope of log(value) against log(x) over rows with
// x in [x_min, x_max]. Throws InsufficientPointsError for fewer than three
// usable rows and NonPositiveValueError if any used x or value is <= 0.
SlopeFit fit_loglog_slope(const SweepSeries& s, double x_min, double x_max);

struct Peak {
  double x;
  double value;
};

// Strict local maxima whose topographic prominence is at least
// min_prominence times the series maximum, refined by a parabola through the
// three samples around each maximum. Fewer than three rows yield no peaks.
std::vector<Peak> find_peaks(const SweepSeries& s, double min_prominence);

}  // namespace nfrht
