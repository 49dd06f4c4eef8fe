#pragma once

// Shared helpers for the test binaries.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace testutil {

inline double rel_err(double value, double reference) {
  const double scale = std::abs(reference) > 0.0 ? std::abs(reference) : 1.0;
  return std::abs(value - reference) / scale;
}

// Unique scratch directory, removed on destruction.
class TempDir {
 public:
  TempDir() {
    char pattern[] = "/tmp/nfrht_test_XXXXXX";
    const char* p = mkdtemp(pattern);
    path_ = p ? p : "/tmp";
  }
  ~TempDir() {
    if (!path_.empty() && path_ != "/tmp") {
      const std::string cmd = "rm -rf '" + path_ + "'";
      const int rc = std::system(cmd.c_str());
      (void)rc;  // cleanup is best effort
    }
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name) const { return path_ + "/" + name; }

 private:
  std::string path_;
};

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  f << content;
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

// Structural sanity of a rendered SVG plot: well-formed frame, title, and a
// closing tag.
inline bool svg_looks_valid(const std::string& svg) {
  return svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") == 0 &&
         svg.find("viewBox=\"0 0 800 600\"") != std::string::npos &&
         svg.find("<text") != std::string::npos &&
         svg.rfind("</svg>\n") == svg.size() - 7;
}

}  // namespace testutil
