// Minimal SVG line-plot renderer.
#include "nfrht/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "nfrht/errors.hpp"

namespace nfrht {

namespace {

// Plot frame in canvas coordinates.
constexpr double kLeft = 80.0;
constexpr double kRight = 780.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 540.0;

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string fmt_tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

struct AxisRange {
  double lo = 0.0;
  double hi = 1.0;
};

AxisRange padded(double lo, double hi, double pad_fraction) {
  if (hi <= lo) {
    const double pad = std::max(1.0, std::abs(lo) * 0.5);
    return {lo - pad, lo + pad};
  }
  const double pad = (hi - lo) * pad_fraction;
  return {lo - pad, hi + pad};
}

// Largest of {1, 2, 5} x 10^n not exceeding a nice spacing for ~5 intervals.
double nice_step(double range) {
  const double raw = range / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double frac = raw / mag;
  double nice = 10.0;
  if (frac <= 1.0) nice = 1.0;
  else if (frac <= 2.0) nice = 2.0;
  else if (frac <= 5.0) nice = 5.0;
  return nice * mag;
}

std::vector<double> linear_ticks(const AxisRange& r) {
  std::vector<double> t;
  const double step = nice_step(r.hi - r.lo);
  double v = std::ceil(r.lo / step - 1e-9) * step;
  for (; v <= r.hi + 1e-9 * step; v += step) {
    t.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
  }
  return t;
}

// Tick positions for a log10-transformed axis: integer decades, thinned when
// the span is wide.
std::vector<int> decade_ticks(const AxisRange& r) {
  std::vector<int> t;
  const int first = static_cast<int>(std::ceil(r.lo - 1e-9));
  const int last = static_cast<int>(std::floor(r.hi + 1e-9));
  if (last < first) return t;
  const int n = last - first + 1;
  const int stride = std::max(1, (n + 7) / 8);
  for (int d = first; d <= last; d += stride) t.push_back(d);
  return t;
}

}  // namespace

std::string render_svg(const SweepSeries& s, PlotAxes axes) {
  const bool xlog = axes != PlotAxes::linear;
  const bool ylog = axes == PlotAxes::loglog;

  struct Pt {
    double tx;
    double ty;
  };
  std::vector<Pt> pts;
  for (const auto& r : s.rows) {
    if (r.failed || !std::isfinite(r.x) || !std::isfinite(r.value)) continue;
    if (xlog && !(r.x > 0.0)) {
      throw ValidationError("logarithmic x axis requires positive x values");
    }
    if (ylog && !(r.value > 0.0)) {
      throw ValidationError("logarithmic value axis requires positive values");
    }
    pts.push_back({xlog ? std::log10(r.x) : r.x, ylog ? std::log10(r.value) : r.value});
  }

  AxisRange xr;
  AxisRange yr;
  if (!pts.empty()) {
    double xlo = pts.front().tx, xhi = xlo, ylo = pts.front().ty, yhi = ylo;
    for (const auto& p : pts) {
      xlo = std::min(xlo, p.tx);
      xhi = std::max(xhi, p.tx);
      ylo = std::min(ylo, p.ty);
      yhi = std::max(yhi, p.ty);
    }
    xr = padded(xlo, xhi, 0.0);
    yr = padded(ylo, yhi, 0.05);
    if (xr.hi <= xr.lo) xr = padded(xlo, xlo, 0.0);
    if (yr.hi <= yr.lo) yr = padded(ylo, ylo, 0.0);
  }

  auto px = [&](double tx) {
    return kLeft + (tx - xr.lo) / (xr.hi - xr.lo) * (kRight - kLeft);
  };
  auto py = [&](double ty) {
    return kBottom - (ty - yr.lo) / (yr.hi - yr.lo) * (kBottom - kTop);
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
         "viewBox=\"0 0 800 600\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"#ffffff\"/>\n";
  out << "<rect x=\"" << fmt2(kLeft) << "\" y=\"" << fmt2(kTop) << "\" width=\""
      << fmt2(kRight - kLeft) << "\" height=\"" << fmt2(kBottom - kTop)
      << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  out << "<text x=\"430\" y=\"26\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">"
      << s.title << "</text>\n";

  // Axis tick marks and labels.
  auto x_tick = [&](double tx, const std::string& label) {
    const double p = px(tx);
    if (p < kLeft - 0.5 || p > kRight + 0.5) return;
    out << "<line x1=\"" << fmt2(p) << "\" y1=\"" << fmt2(kBottom) << "\" x2=\""
        << fmt2(p) << "\" y2=\"" << fmt2(kBottom + 6.0)
        << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << fmt2(p) << "\" y=\"" << fmt2(kBottom + 20.0)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
        << label << "</text>\n";
  };
  auto y_tick = [&](double ty, const std::string& label) {
    const double p = py(ty);
    if (p < kTop - 0.5 || p > kBottom + 0.5) return;
    out << "<line x1=\"" << fmt2(kLeft - 6.0) << "\" y1=\"" << fmt2(p) << "\" x2=\""
        << fmt2(kLeft) << "\" y2=\"" << fmt2(p)
        << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << fmt2(kLeft - 10.0) << "\" y=\"" << fmt2(p + 4.0)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << label
        << "</text>\n";
  };

  if (!pts.empty()) {
    if (xlog) {
      for (int d : decade_ticks(xr)) x_tick(d, "1e" + std::to_string(d));
    } else {
      for (double v : linear_ticks(xr)) x_tick(v, fmt_tick(v));
    }
    if (ylog) {
      for (int d : decade_ticks(yr)) y_tick(d, "1e" + std::to_string(d));
    } else {
      for (double v : linear_ticks(yr)) y_tick(v, fmt_tick(v));
    }
  }

  out << "<text x=\"430\" y=\"585\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">"
      << s.abscissa_name << " (" << s.abscissa_units << ")</text>\n";
  out << "<text x=\"22\" y=\"290\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 22 290)\">"
      << s.value_name << " (" << s.value_units << ")</text>\n";

  if (pts.size() >= 2) {
    out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out << " ";
      out << fmt2(px(pts[i].tx)) << "," << fmt2(py(pts[i].ty));
    }
    out << "\"/>\n";
  } else if (pts.size() == 1) {
    out << "<circle cx=\"" << fmt2(px(pts[0].tx)) << "\" cy=\"" << fmt2(py(pts[0].ty))
        << "\" r=\"3\" fill=\"#1f77b4\"/>\n";
  }

  out << "</svg>\n";
  return out.str();
}

void emit_plot(const SweepSeries& s, PlotAxes axes, const std::string& path) {
  const std::string body = render_svg(s, axes);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path);
  f << body;
  f.flush();
  if (!f) throw IoError("error writing: " + path);
}

}  // namespace nfrht
