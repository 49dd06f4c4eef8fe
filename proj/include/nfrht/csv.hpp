#pragma once

// CSV serialization of sweep series. Output is byte-identical for identical
// series: no timestamps, locale-independent formatting.
#include <string>

#include "nfrht/sweep.hpp"

namespace nfrht {

std::string csv_to_string(const SweepSeries& s);

void emit_csv(const SweepSeries& s, const std::string& path);

}  // namespace nfrht
