// C boundary: opaque handles, status codes, and exception mapping.
#include "nfrht.h"

#include <cstdio>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "nfrht/analysis.hpp"
#include "nfrht/config.hpp"
#include "nfrht/csv.hpp"
#include "nfrht/errors.hpp"
#include "nfrht/spectrum.hpp"
#include "nfrht/svg.hpp"
#include "nfrht/sweep.hpp"
#include "nfrht/validation.hpp"
#include "nfrht/version.hpp"

using namespace nfrht;

struct nfrht_config {
  RawConfig raw;
  std::vector<RawConfig::Entry> overrides;
  std::string error;
  std::vector<std::string> warnings;
};

struct nfrht_series {
  SweepSeries series;
  std::string error;
};

namespace {

// Runs `body`, mapping thrown exceptions onto status codes and the handle's
// error string.
template <typename F>
nfrht_status guarded(std::string* error, F&& body) {
  try {
    if (error) error->clear();
    return body();
  } catch (const ParseError& e) {
    if (error) {
      *error = e.what();
      if (e.line() > 0) {
        *error += " (line " + std::to_string(e.line()) + ", column " +
                  std::to_string(e.column()) + ")";
      }
    }
    return NFRHT_ERR_PARSE;
  } catch (const ValidationError& e) {
    if (error) *error = e.what();
    return NFRHT_ERR_VALIDATION;
  } catch (const NumericError& e) {
    if (error) *error = e.what();
    return NFRHT_ERR_NUMERIC;
  } catch (const IoError& e) {
    if (error) *error = e.what();
    return NFRHT_ERR_IO;
  } catch (const std::invalid_argument& e) {
    if (error) *error = e.what();
    return NFRHT_ERR_ARG;
  } catch (const std::exception& e) {
    if (error) *error = e.what();
    return NFRHT_ERR_INTERNAL;
  } catch (...) {
    if (error) *error = "unknown error";
    return NFRHT_ERR_INTERNAL;
  }
}

RunConfig resolve(nfrht_config* cfg) { return finalize_config(cfg->raw, cfg->overrides); }

}  // namespace

extern "C" {

const char* nfrht_version(void) { return NFRHT_VERSION; }

nfrht_config* nfrht_config_create(void) { return new (std::nothrow) nfrht_config(); }

void nfrht_config_destroy(nfrht_config* cfg) { delete cfg; }

nfrht_status nfrht_config_load_file(nfrht_config* cfg, const char* path) {
  if (!cfg) return NFRHT_ERR_ARG;
  if (!path) {
    cfg->error = "path is null";
    return NFRHT_ERR_ARG;
  }
  return guarded(&cfg->error, [&]() {
    cfg->raw = parse_config_file(path);
    return NFRHT_OK;
  });
}

nfrht_status nfrht_config_set(nfrht_config* cfg, const char* dotted_key,
                              const char* value) {
  if (!cfg) return NFRHT_ERR_ARG;
  if (!dotted_key || !value) {
    cfg->error = "dotted_key and value must be non-null";
    return NFRHT_ERR_ARG;
  }
  return guarded(&cfg->error, [&]() {
    const std::string full(dotted_key);
    const std::size_t dot = full.rfind('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == full.size()) {
      cfg->error = "expected 'section.key': '" + full + "'";
      return NFRHT_ERR_ARG;
    }
    const std::string section = full.substr(0, dot);
    const std::string key = full.substr(dot + 1);
    if (!known_config_key(section, key)) {
      cfg->error = "unknown configuration key '" + full + "'";
      return NFRHT_ERR_PARSE;
    }
    cfg->overrides.push_back({section, key, value, 0, 0});
    return NFRHT_OK;
  });
}

nfrht_status nfrht_config_set_near_field(nfrht_config* cfg, int enabled) {
  if (!cfg) return NFRHT_ERR_ARG;
  cfg->overrides.push_back({"quadrature", "near_field", enabled ? "true" : "false", 0, 0});
  cfg->error.clear();
  return NFRHT_OK;
}

nfrht_status nfrht_config_set_sweep_kind(nfrht_config* cfg, const char* kind) {
  if (!cfg) return NFRHT_ERR_ARG;
  if (!kind) {
    cfg->error = "kind is null";
    return NFRHT_ERR_ARG;
  }
  SweepKind parsed;
  if (!parse_sweep_kind(kind, parsed)) {
    cfg->error = std::string("unknown sweep kind '") + kind + "'";
    return NFRHT_ERR_ARG;
  }
  cfg->overrides.push_back({"sweep", "kind", kind, 0, 0});
  cfg->error.clear();
  return NFRHT_OK;
}

const char* nfrht_config_error(const nfrht_config* cfg) {
  return cfg ? cfg->error.c_str() : "null config";
}

nfrht_status nfrht_config_warning_count(nfrht_config* cfg, size_t* count) {
  if (!cfg || !count) return NFRHT_ERR_ARG;
  return guarded(&cfg->error, [&]() {
    cfg->warnings = resolve(cfg).warnings;
    *count = cfg->warnings.size();
    return NFRHT_OK;
  });
}

const char* nfrht_config_warning(const nfrht_config* cfg, size_t index) {
  if (!cfg || index >= cfg->warnings.size()) return nullptr;
  return cfg->warnings[index].c_str();
}

nfrht_status nfrht_run_sweep(nfrht_config* cfg, int workers, nfrht_series** out) {
  if (!cfg) return NFRHT_ERR_ARG;
  if (!out) {
    cfg->error = "out is null";
    return NFRHT_ERR_ARG;
  }
  *out = nullptr;
  return guarded(&cfg->error, [&]() {
    const RunConfig rc = resolve(cfg);
    SweepSeries series = run_sweep(rc.sweep, rc.scenario, workers);
    series.metadata = config_snapshot(rc.scenario, rc.sweep);
    auto* handle = new nfrht_series();
    handle->series = std::move(series);
    *out = handle;
    return NFRHT_OK;
  });
}

nfrht_status nfrht_eval_spectral_density(nfrht_config* cfg, double omega_rad_s,
                                         double* density, double* error_estimate) {
  if (!cfg) return NFRHT_ERR_ARG;
  if (!density) {
    cfg->error = "density is null";
    return NFRHT_ERR_ARG;
  }
  return guarded(&cfg->error, [&]() {
    const RunConfig rc = resolve(cfg);
    const SpectralResult r = spectral_power_density(rc.scenario, omega_rad_s);
    *density = r.power_density;
    if (error_estimate) *error_estimate = r.error_estimate;
    return NFRHT_OK;
  });
}

nfrht_status nfrht_eval_total_power(nfrht_config* cfg, double* power,
                                    double* error_estimate, double* negative_power) {
  if (!cfg) return NFRHT_ERR_ARG;
  if (!power) {
    cfg->error = "power is null";
    return NFRHT_ERR_ARG;
  }
  return guarded(&cfg->error, [&]() {
    const RunConfig rc = resolve(cfg);
    const TotalPower p = total_power(rc.scenario);
    *power = p.power;
    if (error_estimate) *error_estimate = p.error_estimate;
    if (negative_power) *negative_power = p.negative_power;
    if (!p.converged) {
      cfg->error = "total power quadrature did not converge";
      return NFRHT_ERR_NUMERIC;
    }
    return NFRHT_OK;
  });
}

nfrht_status nfrht_run_validation(nfrht_config* cfg, char* report_buf, size_t buf_cap,
                                  int* n_failed) {
  if (!cfg) return NFRHT_ERR_ARG;
  if (!n_failed) {
    cfg->error = "n_failed is null";
    return NFRHT_ERR_ARG;
  }
  return guarded(&cfg->error, [&]() {
    const RunConfig rc = resolve(cfg);
    const std::vector<OracleReport> reports = run_validation_suite(rc.scenario);
    std::string text;
    int failed = 0;
    for (const auto& r : reports) {
      if (!r.pass) ++failed;
      char line[256];
      std::snprintf(line, sizeof line, "%s %s: value=%.6e reference=%.6e rel_err=%.3e tol=%.1e\n",
                    r.pass ? "PASS" : "FAIL", r.name.c_str(), r.test_value,
                    r.reference_value, r.relative_error, r.tolerance);
      text += line;
    }
    *n_failed = failed;
    if (report_buf && buf_cap > 0) {
      const size_t n = std::min(buf_cap - 1, text.size());
      std::memcpy(report_buf, text.data(), n);
      report_buf[n] = '\0';
    }
    return NFRHT_OK;
  });
}

void nfrht_series_destroy(nfrht_series* s) { delete s; }

size_t nfrht_series_size(const nfrht_series* s) { return s ? s->series.rows.size() : 0; }

nfrht_status nfrht_series_row(const nfrht_series* s, size_t index, double* x,
                              double* value, double* error_estimate, int* failed) {
  if (!s || index >= s->series.rows.size()) return NFRHT_ERR_ARG;
  const SweepRow& r = s->series.rows[index];
  if (x) *x = r.x;
  if (value) *value = r.value;
  if (error_estimate) *error_estimate = r.error_estimate;
  if (failed) *failed = r.failed ? 1 : 0;
  return NFRHT_OK;
}

const char* nfrht_series_x_label(const nfrht_series* s) {
  return s ? s->series.abscissa_name.c_str() : "";
}

const char* nfrht_series_value_label(const nfrht_series* s) {
  return s ? s->series.value_name.c_str() : "";
}

size_t nfrht_series_failed_count(const nfrht_series* s) {
  return s ? s->series.failed_count() : 0;
}

nfrht_status nfrht_series_write_csv(nfrht_series* s, const char* path) {
  if (!s) return NFRHT_ERR_ARG;
  if (!path) {
    s->error = "path is null";
    return NFRHT_ERR_ARG;
  }
  return guarded(&s->error, [&]() {
    emit_csv(s->series, path);
    return NFRHT_OK;
  });
}

nfrht_status nfrht_series_write_plot(nfrht_series* s, const char* path,
                                     const char* axes) {
  if (!s) return NFRHT_ERR_ARG;
  if (!path || !axes) {
    s->error = "path and axes must be non-null";
    return NFRHT_ERR_ARG;
  }
  PlotAxes parsed;
  const std::string a(axes);
  if (a == "linear") parsed = PlotAxes::linear;
  else if (a == "loglog") parsed = PlotAxes::loglog;
  else if (a == "semilogx") parsed = PlotAxes::semilogx;
  else {
    s->error = "axes must be linear, loglog, or semilogx: '" + a + "'";
    return NFRHT_ERR_ARG;
  }
  return guarded(&s->error, [&]() {
    emit_plot(s->series, parsed, path);
    return NFRHT_OK;
  });
}

nfrht_status nfrht_series_find_peaks(nfrht_series* s, double min_prominence,
                                     double* xs, double* values, size_t cap,
                                     size_t* n_found) {
  if (!s) return NFRHT_ERR_ARG;
  if (!n_found) {
    s->error = "n_found is null";
    return NFRHT_ERR_ARG;
  }
  return guarded(&s->error, [&]() {
    const std::vector<Peak> peaks = find_peaks(s->series, min_prominence);
    *n_found = peaks.size();
    const size_t n = std::min(cap, peaks.size());
    for (size_t i = 0; i < n; ++i) {
      if (xs) xs[i] = peaks[i].x;
      if (values) values[i] = peaks[i].value;
    }
    return NFRHT_OK;
  });
}

nfrht_status nfrht_series_fit_loglog(nfrht_series* s, double x_min, double x_max,
                                     double* slope, double* std_error) {
  if (!s) return NFRHT_ERR_ARG;
  if (!slope) {
    s->error = "slope is null";
    return NFRHT_ERR_ARG;
  }
  return guarded(&s->error, [&]() {
    const SlopeFit fit = fit_loglog_slope(s->series, x_min, x_max);
    *slope = fit.slope;
    if (std_error) *std_error = fit.std_error;
    return NFRHT_OK;
  });
}

const char* nfrht_series_error(const nfrht_series* s) {
  return s ? s->error.c_str() : "null series";
}

}  // extern "C"
