// CSV writer for sweep series.
#include "nfrht/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "nfrht/errors.hpp"
#include "nfrht/version.hpp"

namespace nfrht {

namespace {

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

}  // namespace

std::string csv_to_string(const SweepSeries& s) {
  std::ostringstream out;
  out << "# nfrht " << NFRHT_VERSION << "\n";
  out << "# series: " << s.title << "\n";
  out << "# x: " << s.abscissa_name << " [" << s.abscissa_units << "]\n";
  out << "# value: " << s.value_name << " [" << s.value_units << "]\n";
  for (const auto& line : s.metadata) out << "# config: " << line << "\n";
  out << "x,value,error_estimate,flag\n";
  for (const auto& r : s.rows) {
    if (r.failed) {
      out << fmt(r.x) << ",,,QUAD_FAIL\n";
    } else {
      out << fmt(r.x) << "," << fmt(r.value) << "," << fmt(r.error_estimate) << ",OK\n";
    }
  }
  return out.str();
}

void emit_csv(const SweepSeries& s, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path);
  f << csv_to_string(s);
  f.flush();
  if (!f) throw IoError("error writing: " + path);
}

}  // namespace nfrht
