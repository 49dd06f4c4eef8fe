/* C interface to the radiative heat transfer calculator.
 *
 * Usage pattern: create a config handle, optionally load a file and apply
 * overrides, then run a sweep or evaluate scalars. All functions returning
 * nfrht_status leave a human-readable message on the handle, retrievable via
 * nfrht_config_error / nfrht_series_error, when they fail.
 */
#ifndef NFRHT_H
#define NFRHT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nfrht_status {
  NFRHT_OK = 0,
  NFRHT_ERR_IO = 1,         /* file could not be read or written */
  NFRHT_ERR_PARSE = 2,      /* malformed configuration text or unknown key */
  NFRHT_ERR_VALIDATION = 3, /* value violates a documented invariant */
  NFRHT_ERR_NUMERIC = 4,    /* quadrature or root finding failed */
  NFRHT_ERR_ARG = 5,        /* bad argument to an API call */
  NFRHT_ERR_INTERNAL = 6    /* unexpected failure */
} nfrht_status;

typedef struct nfrht_config nfrht_config;
typedef struct nfrht_series nfrht_series;

const char* nfrht_version(void);

/* Configuration handles. A fresh handle carries the built-in defaults
 * (silicon carbide particle and half space, 5 nm radius, 10 nm height,
 * 300 K, no rotation). */
nfrht_config* nfrht_config_create(void);
void nfrht_config_destroy(nfrht_config* cfg);

nfrht_status nfrht_config_load_file(nfrht_config* cfg, const char* path);

/* Override one value; dotted_key is "section.key", e.g. "particle.radius_m"
 * or "material.bulk.gamma_rad_s". Applied after any loaded file, in call
 * order. */
nfrht_status nfrht_config_set(nfrht_config* cfg, const char* dotted_key,
                              const char* value);
nfrht_status nfrht_config_set_near_field(nfrht_config* cfg, int enabled);
/* kind is one of "spectrum", "power_vs_z0", "power_vs_omega0", "density". */
nfrht_status nfrht_config_set_sweep_kind(nfrht_config* cfg, const char* kind);

const char* nfrht_config_error(const nfrht_config* cfg);

/* Resolving the configuration may emit warnings (for example a marginal
 * dipole approximation). Counting them validates the configuration. */
nfrht_status nfrht_config_warning_count(nfrht_config* cfg, size_t* count);
const char* nfrht_config_warning(const nfrht_config* cfg, size_t index);

/* Runs the configured sweep on `workers` threads (0 = auto) and hands back a
 * series handle. Points that fail numerically are flagged rows, not errors. */
nfrht_status nfrht_run_sweep(nfrht_config* cfg, int workers, nfrht_series** out);

/* Scalar evaluations of the configured scenario. */
nfrht_status nfrht_eval_spectral_density(nfrht_config* cfg, double omega_rad_s,
                                         double* density, double* error_estimate);
nfrht_status nfrht_eval_total_power(nfrht_config* cfg, double* power,
                                    double* error_estimate, double* negative_power);

/* Runs the built-in validation suite; writes a PASS/FAIL line per check into
 * report_buf (NUL-terminated, truncated to buf_cap) and the number of failed
 * checks into n_failed. */
nfrht_status nfrht_run_validation(nfrht_config* cfg, char* report_buf,
                                  size_t buf_cap, int* n_failed);

/* Series accessors. */
void nfrht_series_destroy(nfrht_series* s);
size_t nfrht_series_size(const nfrht_series* s);
nfrht_status nfrht_series_row(const nfrht_series* s, size_t index, double* x,
                              double* value, double* error_estimate, int* failed);
const char* nfrht_series_x_label(const nfrht_series* s);
const char* nfrht_series_value_label(const nfrht_series* s);
size_t nfrht_series_failed_count(const nfrht_series* s);

nfrht_status nfrht_series_write_csv(nfrht_series* s, const char* path);
/* axes is one of "linear", "loglog", "semilogx". */
nfrht_status nfrht_series_write_plot(nfrht_series* s, const char* path,
                                     const char* axes);

/* Peak positions refined by local parabolas; returns up to cap peaks and the
 * total number found. min_prominence is a fraction of the series maximum. */
nfrht_status nfrht_series_find_peaks(nfrht_series* s, double min_prominence,
                                     double* xs, double* values, size_t cap,
                                     size_t* n_found);
nfrht_status nfrht_series_fit_loglog(nfrht_series* s, double x_min, double x_max,
                                     double* slope, double* std_error);
const char* nfrht_series_error(const nfrht_series* s);

#ifdef __cplusplus
}
#endif

#endif /* NFRHT_H */
