// Slope fitting and peak extraction.
#include "nfrht/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "nfrht/errors.hpp"

namespace nfrht {

SlopeFit fit_loglog_slope(const SweepSeries& s, double x_min, double x_max) {
  std::vector<double> lx;
  std::vector<double> lv;
  for (const auto& r : s.rows) {
    if (r.failed || r.x < x_min || r.x > x_max) continue;
    if (!(r.x > 0.0) || !(r.value > 0.0)) {
      throw NonPositiveValueError(
          "log-log slope fit requires positive x and value in the fit range");
    }
    lx.push_back(std::log(r.x));
    lv.push_back(std::log(r.value));
  }
  const std::size_t n = lx.size();
  if (n < 3) {
    throw InsufficientPointsError("log-log slope fit requires at least 3 points in range");
  }

  double mx = 0.0;
  double mv = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lx[i];
    mv += lv[i];
  }
  mx /= static_cast<double>(n);
  mv /= static_cast<double>(n);

  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = lx[i] - mx;
    sxx += dx * dx;
    sxy += dx * (lv[i] - mv);
  }
  if (sxx <= 0.0) {
    throw InsufficientPointsError("log-log slope fit requires distinct x values");
  }

  SlopeFit fit{};
  fit.slope = sxy / sxx;
  const double intercept = mv - fit.slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double resid = lv[i] - (intercept + fit.slope * lx[i]);
    ssr += resid * resid;
  }
  fit.std_error = std::sqrt(ssr / static_cast<double>(n - 2) / sxx);
  return fit;
}

std::vector<Peak> find_peaks(const SweepSeries& s, double min_prominence) {
  std::vector<double> xs;
  std::vector<double> vs;
  for (const auto& r : s.rows) {
    if (r.failed || !std::isfinite(r.value)) continue;
    xs.push_back(r.x);
    vs.push_back(r.value);
  }
  std::vector<Peak> peaks;
  const std::size_t n = vs.size();
  if (n < 3) return peaks;

  double vmax = vs[0];
  for (double v : vs) vmax = std::max(vmax, v);
  const double threshold = min_prominence * vmax;

  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(vs[i] > vs[i - 1] && vs[i] > vs[i + 1])) continue;

    // Topographic prominence: walk outward until a higher sample appears (or
    // the series ends); the base on each side is the lowest sample crossed.
    double base_left = vs[i];
    for (std::size_t j = i; j-- > 0;) {
      if (vs[j] > vs[i]) break;
      base_left = std::min(base_left, vs[j]);
    }
    double base_right = vs[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (vs[j] > vs[i]) break;
      base_right = std::min(base_right, vs[j]);
    }
    const double prominence = vs[i] - std::max(base_left, base_right);
    if (prominence < threshold) continue;

    // Refine by the parabola through the three samples around the maximum.
    const double d1 = (vs[i] - vs[i - 1]) / (xs[i] - xs[i - 1]);
    const double d2 = (vs[i + 1] - vs[i]) / (xs[i + 1] - xs[i]);
    const double a2 = (d2 - d1) / (xs[i + 1] - xs[i - 1]);
    Peak p{xs[i], vs[i]};
    if (a2 < 0.0) {
      double xstar = 0.5 * (xs[i - 1] + xs[i]) - d1 / (2.0 * a2);
      xstar = std::clamp(xstar, xs[i - 1], xs[i + 1]);
      const double vstar =
          vs[i - 1] + d1 * (xstar - xs[i - 1]) + a2 * (xstar - xs[i - 1]) * (xstar - xs[i]);
      p.x = xstar;
      p.value = vstar;
    }
    peaks.push_back(p);
  }
  return peaks;
}

}  // namespace nfrht
