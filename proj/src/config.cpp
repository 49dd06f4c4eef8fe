// Configuration parsing, schema checks, and resolution.
#include "nfrht/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "nfrht/errors.hpp"

namespace nfrht {

namespace {

const std::map<std::string, std::vector<std::string>>& schema() {
  static const std::map<std::string, std::vector<std::string>> s = {
      {"particle", {"radius_m", "z0_m", "omega0_rad_s", "dressing"}},
      {"bulk", {"temperature_K"}},
      {"material.particle", {"eps_inf", "omega_L_rad_s", "omega_T_rad_s", "gamma_rad_s"}},
      {"material.bulk", {"eps_inf", "omega_L_rad_s", "omega_T_rad_s", "gamma_rad_s"}},
      {"quadrature",
       {"rel_tol", "abs_tol_floor", "k_cutoff_factor", "max_subdivisions",
        "omega_min_rad_s", "omega_max_rad_s", "near_field"}},
      {"sweep", {"kind", "min", "max", "count", "spacing", "at_omega_rad_s"}},
  };
  return s;
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

int first_nonspace_column(const std::string& s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return static_cast<int>(i) + 1;
}

}  // namespace

bool known_config_key(const std::string& section, const std::string& key) {
  const auto it = schema().find(section);
  if (it == schema().end()) return false;
  return std::find(it->second.begin(), it->second.end(), key) != it->second.end();
}

RawConfig parse_config_text(const std::string& text) {
  RawConfig raw;
  std::map<std::string, int> seen;  // "section\nkey" -> first line
  std::string current_section;

  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const int col = first_nonspace_column(line);

    if (body.front() == '[') {
      if (body.back() != ']' || body.size() < 3) {
        throw ParseError("malformed section header", line_no, col);
      }
      const std::string name = trim(body.substr(1, body.size() - 2));
      if (name.empty()) throw ParseError("empty section name", line_no, col);
      if (schema().find(name) == schema().end()) {
        throw ParseError("unknown section [" + name + "]", line_no, col);
      }
      current_section = name;
      continue;
    }

    const std::size_t eq = body.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected 'key = value' or a section header", line_no, col);
    }
    if (current_section.empty()) {
      throw ParseError("key before any section header", line_no, col);
    }
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key.empty()) throw ParseError("empty key", line_no, col);
    if (value.empty()) throw ParseError("empty value for key '" + key + "'", line_no, col);
    if (!known_config_key(current_section, key)) {
      throw ParseError("unknown key '" + key + "' in section [" + current_section + "]",
                       line_no, col);
    }
    const std::string id = current_section + "\n" + key;
    const auto ins = seen.emplace(id, line_no);
    if (!ins.second) {
      throw ParseError("duplicate key '" + key + "' in section [" + current_section +
                           "] (first set on line " + std::to_string(ins.first->second) + ")",
                       line_no, col);
    }
    raw.entries.push_back({current_section, key, value, line_no, col});
  }
  return raw;
}

RawConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading config file: " + path);
  return parse_config_text(buf.str());
}

const char* dressing_name(Dressing d) {
  return d == Dressing::bare ? "bare" : "clausius_mossotti";
}

const char* sweep_kind_name(SweepKind k) {
  switch (k) {
    case SweepKind::spectrum:
      return "spectrum";
    case SweepKind::power_vs_z0:
      return "power_vs_z0";
    case SweepKind::power_vs_omega0:
      return "power_vs_omega0";
    case SweepKind::density:
      return "density";
  }
  return "spectrum";
}

const char* spacing_name(GridSpacing s) {
  return s == GridSpacing::linear ? "linear" : "log";
}

bool parse_sweep_kind(const std::string& text, SweepKind& out) {
  if (text == "spectrum") out = SweepKind::spectrum;
  else if (text == "power_vs_z0") out = SweepKind::power_vs_z0;
  else if (text == "power_vs_omega0") out = SweepKind::power_vs_omega0;
  else if (text == "density") out = SweepKind::density;
  else return false;
  return true;
}

namespace {

using Entry = RawConfig::Entry;

double entry_double(const Entry& e) {
  const char* begin = e.value.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw ParseError("value for '" + e.section + "." + e.key + "' is not a number: '" +
                         e.value + "'",
                     e.line, e.column);
  }
  return v;
}

int entry_int(const Entry& e) {
  const char* begin = e.value.c_str();
  char* end = nullptr;
  const long v = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0') {
    throw ParseError("value for '" + e.section + "." + e.key + "' is not an integer: '" +
                         e.value + "'",
                     e.line, e.column);
  }
  return static_cast<int>(v);
}

bool entry_bool(const Entry& e) {
  if (e.value == "true" || e.value == "1") return true;
  if (e.value == "false" || e.value == "0") return false;
  throw ParseError("value for '" + e.section + "." + e.key +
                       "' must be true or false: '" + e.value + "'",
                   e.line, e.column);
}

void apply_material(const std::map<std::string, Entry>& merged,
                    const std::string& section, LorentzMaterial& m) {
  auto get = [&](const char* key) -> const Entry* {
    const auto it = merged.find(section + "\n" + key);
    return it == merged.end() ? nullptr : &it->second;
  };
  if (const Entry* e = get("eps_inf")) m.eps_inf = entry_double(*e);
  if (const Entry* e = get("omega_L_rad_s")) m.omega_L = entry_double(*e);
  if (const Entry* e = get("omega_T_rad_s")) m.omega_T = entry_double(*e);
  if (const Entry* e = get("gamma_rad_s")) m.gamma = entry_double(*e);

  if (!(m.eps_inf > 0.0)) {
    throw ValidationError(section + ".eps_inf must be positive");
  }
  if (!(m.omega_T > 0.0)) {
    throw ValidationError(section + ".omega_T_rad_s must be positive");
  }
  if (!(m.omega_L > m.omega_T)) {
    throw ValidationError(section + ".omega_L_rad_s must exceed omega_T_rad_s");
  }
  if (m.gamma < 0.0) {
    throw ValidationError(section + ".gamma_rad_s must be non-negative");
  }
}

}  // namespace

RunConfig finalize_config(const RawConfig& raw, const std::vector<Entry>& overrides) {
  std::map<std::string, Entry> merged;
  for (const Entry& e : raw.entries) merged[e.section + "\n" + e.key] = e;
  for (const Entry& e : overrides) {
    if (!known_config_key(e.section, e.key)) {
      throw ParseError("unknown configuration key '" + e.section + "." + e.key + "'",
                       e.line, e.column);
    }
    merged[e.section + "\n" + e.key] = e;
  }

  auto get = [&](const char* section, const char* key) -> const Entry* {
    const auto it = merged.find(std::string(section) + "\n" + key);
    return it == merged.end() ? nullptr : &it->second;
  };

  RunConfig rc{};
  ScenarioConfig& sc = rc.scenario;

  apply_material(merged, "material.particle", sc.particle.material);
  apply_material(merged, "material.bulk", sc.bulk_material);

  if (const Entry* e = get("particle", "radius_m")) sc.particle.radius_a = entry_double(*e);
  if (const Entry* e = get("particle", "z0_m")) sc.particle.height_z0 = entry_double(*e);
  if (const Entry* e = get("particle", "omega0_rad_s")) sc.particle.omega0 = entry_double(*e);
  if (const Entry* e = get("particle", "dressing")) {
    if (e->value == "bare") {
      sc.particle.dressing = Dressing::bare;
    } else if (e->value == "clausius_mossotti") {
      sc.particle.dressing = Dressing::clausius_mossotti;
    } else {
      throw ParseError("particle.dressing must be 'bare' or 'clausius_mossotti': '" +
                           e->value + "'",
                       e->line, e->column);
    }
  }

  if (!(sc.particle.radius_a > 0.0)) {
    throw ValidationError("particle.radius_m must be positive");
  }
  if (!(sc.particle.height_z0 > sc.particle.radius_a)) {
    throw ValidationError("particle.z0_m must exceed particle.radius_m");
  }
  if (sc.particle.omega0 < 0.0) {
    throw ValidationError("particle.omega0_rad_s must be non-negative");
  }
  if (sc.particle.radius_a > 0.5 * sc.particle.height_z0) {
    rc.warnings.push_back(
        "particle radius exceeds half the height; the point-dipole treatment is marginal");
  }

  if (const Entry* e = get("bulk", "temperature_K")) sc.bulk_temperature = entry_double(*e);
  if (!(sc.bulk_temperature > 0.0)) {
    throw ValidationError("bulk.temperature_K must be positive");
  }

  QuadratureConfig& q = sc.quadrature;
  if (const Entry* e = get("quadrature", "rel_tol")) q.rel_tol = entry_double(*e);
  if (const Entry* e = get("quadrature", "abs_tol_floor")) q.abs_tol_floor = entry_double(*e);
  if (const Entry* e = get("quadrature", "k_cutoff_factor")) {
    q.k_cutoff_factor = entry_double(*e);
  }
  if (const Entry* e = get("quadrature", "max_subdivisions")) {
    q.max_subdivisions = entry_int(*e);
  }
  if (const Entry* e = get("quadrature", "near_field")) sc.near_field = entry_bool(*e);
  if (!(q.rel_tol > 0.0 && q.rel_tol <= 1e-2)) {
    throw ValidationError("quadrature.rel_tol must lie in (0, 1e-2]");
  }
  if (q.abs_tol_floor < 0.0) {
    throw ValidationError("quadrature.abs_tol_floor must be non-negative");
  }
  if (!(q.k_cutoff_factor >= 20.0)) {
    throw ValidationError("quadrature.k_cutoff_factor must be at least 20");
  }
  if (q.max_subdivisions < 1) {
    throw ValidationError("quadrature.max_subdivisions must be at least 1");
  }

  const Entry* wmin = get("quadrature", "omega_min_rad_s");
  const Entry* wmax = get("quadrature", "omega_max_rad_s");
  if ((wmin == nullptr) != (wmax == nullptr)) {
    throw ValidationError(
        "quadrature.omega_min_rad_s and quadrature.omega_max_rad_s must be set together");
  }
  if (wmin != nullptr) {
    sc.omega_window_min = entry_double(*wmin);
    sc.omega_window_max = entry_double(*wmax);
    if (!(sc.omega_window_min > 0.0 && sc.omega_window_min < sc.omega_window_max)) {
      throw ValidationError(
          "quadrature window must satisfy 0 < omega_min_rad_s < omega_max_rad_s");
    }
  }

  SweepKind kind = SweepKind::spectrum;
  if (const Entry* e = get("sweep", "kind")) {
    if (!parse_sweep_kind(e->value, kind)) {
      throw ParseError("sweep.kind must be one of spectrum, power_vs_z0, "
                       "power_vs_omega0, density: '" + e->value + "'",
                       e->line, e->column);
    }
  }
  rc.sweep = default_sweep(kind);
  if (const Entry* e = get("sweep", "min")) rc.sweep.min = entry_double(*e);
  if (const Entry* e = get("sweep", "max")) rc.sweep.max = entry_double(*e);
  if (const Entry* e = get("sweep", "count")) rc.sweep.count = entry_int(*e);
  if (const Entry* e = get("sweep", "spacing")) {
    if (e->value == "linear") {
      rc.sweep.spacing = GridSpacing::linear;
    } else if (e->value == "log") {
      rc.sweep.spacing = GridSpacing::log;
    } else {
      throw ParseError("sweep.spacing must be 'linear' or 'log': '" + e->value + "'",
                       e->line, e->column);
    }
  }
  if (const Entry* e = get("sweep", "at_omega_rad_s")) rc.sweep.at_omega = entry_double(*e);

  if (rc.sweep.count < 2) throw ValidationError("sweep.count must be at least 2");
  if (!(rc.sweep.min < rc.sweep.max)) {
    throw ValidationError("sweep.min must be less than sweep.max");
  }
  if (rc.sweep.spacing == GridSpacing::log && !(rc.sweep.min > 0.0)) {
    throw ValidationError("sweep.min must be positive for log spacing");
  }
  const bool x_needs_positive = kind != SweepKind::power_vs_omega0;
  if (x_needs_positive && !(rc.sweep.min > 0.0)) {
    throw ValidationError("sweep.min must be positive for this sweep kind");
  }
  if (kind == SweepKind::power_vs_omega0 && rc.sweep.min < 0.0) {
    throw ValidationError("sweep.min must be non-negative for power_vs_omega0");
  }

  if (kind == SweepKind::density) {
    if (rc.sweep.at_omega == 0.0) {
      try {
        rc.sweep.at_omega = find_resonances(sc.bulk_material).omega_surface;
      } catch (const NoRootError&) {
        throw ValidationError(
            "sweep.at_omega_rad_s must be set explicitly when the bulk material has no "
            "surface resonance");
      }
    } else if (!(rc.sweep.at_omega > 0.0)) {
      throw ValidationError("sweep.at_omega_rad_s must be positive");
    }
  }

  return rc;
}

RunConfig load_config(const std::string& path) {
  return finalize_config(parse_config_file(path));
}

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::vector<std::string> config_snapshot(const ScenarioConfig& sc, const SweepSpec& sweep) {
  std::vector<std::string> lines;
  auto add = [&](const std::string& section, const std::string& key,
                 const std::string& value) {
    lines.push_back("[" + section + "] " + key + " = " + value);
  };

  add("particle", "radius_m", fmt_double(sc.particle.radius_a));
  add("particle", "z0_m", fmt_double(sc.particle.height_z0));
  add("particle", "omega0_rad_s", fmt_double(sc.particle.omega0));
  add("particle", "dressing", dressing_name(sc.particle.dressing));
  add("bulk", "temperature_K", fmt_double(sc.bulk_temperature));

  const struct {
    const char* section;
    const LorentzMaterial* m;
  } mats[] = {{"material.particle", &sc.particle.material},
              {"material.bulk", &sc.bulk_material}};
  for (const auto& entry : mats) {
    add(entry.section, "eps_inf", fmt_double(entry.m->eps_inf));
    add(entry.section, "omega_L_rad_s", fmt_double(entry.m->omega_L));
    add(entry.section, "omega_T_rad_s", fmt_double(entry.m->omega_T));
    add(entry.section, "gamma_rad_s", fmt_double(entry.m->gamma));
  }

  add("quadrature", "rel_tol", fmt_double(sc.quadrature.rel_tol));
  add("quadrature", "abs_tol_floor", fmt_double(sc.quadrature.abs_tol_floor));
  add("quadrature", "k_cutoff_factor", fmt_double(sc.quadrature.k_cutoff_factor));
  add("quadrature", "max_subdivisions", std::to_string(sc.quadrature.max_subdivisions));
  add("quadrature", "omega_min_rad_s", fmt_double(sc.omega_window_min));
  add("quadrature", "omega_max_rad_s", fmt_double(sc.omega_window_max));
  add("quadrature", "near_field", sc.near_field ? "true" : "false");

  add("sweep", "kind", sweep_kind_name(sweep.kind));
  add("sweep", "min", fmt_double(sweep.min));
  add("sweep", "max", fmt_double(sweep.max));
  add("sweep", "count", std::to_string(sweep.count));
  add("sweep", "spacing", spacing_name(sweep.spacing));
  add("sweep", "at_omega_rad_s", fmt_double(sweep.at_omega));
  return lines;
}

}  // namespace nfrht
