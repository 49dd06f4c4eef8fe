#pragma once

// Self-contained SVG line plots of sweep series.
#include <string>

#include "nfrht/sweep.hpp"

namespace nfrht {

enum class PlotAxes { linear, loglog, semilogx };

// Renders an 800x600 plot. Failed rows are skipped. Logarithmic axes reject
// non-positive coordinates with a ValidationError.
std::string render_svg(const SweepSeries& s, PlotAxes axes);

void emit_plot(const SweepSeries& s, PlotAxes axes, const std::string& path);

}  // namespace nfrht
