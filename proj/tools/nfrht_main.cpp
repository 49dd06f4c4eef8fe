// Command-line front end. Deliberately speaks only the C API, so it doubles
// as a smoke test of the shared-library boundary.
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nfrht.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

int exit_code_for(nfrht_status status) {
  switch (status) {
    case NFRHT_OK:
      return kExitOk;
    case NFRHT_ERR_PARSE:
    case NFRHT_ERR_VALIDATION:
    case NFRHT_ERR_ARG:
      return kExitConfig;
    case NFRHT_ERR_NUMERIC:
      return kExitNumeric;
    case NFRHT_ERR_IO:
    case NFRHT_ERR_INTERNAL:
    default:
      return kExitIo;
  }
}

struct Options {
  std::string config_path;
  std::string out_path;
  std::string plot_path;
  std::string axes;  // empty: per-kind default
  std::vector<std::string> sets;
  int workers = 0;
  bool workers_given = false;
  bool near_field = false;
};

const char* default_axes(const std::string& kind) {
  if (kind == "spectrum") return "linear";
  if (kind == "power_vs_z0") return "loglog";
  if (kind == "power_vs_omega0") return "semilogx";
  return "loglog";  // density
}

int apply_common(nfrht_config* cfg, const Options& opt) {
  if (!opt.config_path.empty()) {
    const nfrht_status st = nfrht_config_load_file(cfg, opt.config_path.c_str());
    if (st != NFRHT_OK) {
      std::fprintf(stderr, "config error: %s\n", nfrht_config_error(cfg));
      return st == NFRHT_ERR_IO ? kExitIo : kExitConfig;
    }
  }
  for (const std::string& kv : opt.sets) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::fprintf(stderr, "config error: --set expects section.key=value, got '%s'\n",
                   kv.c_str());
      return kExitConfig;
    }
    const std::string key = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    if (nfrht_config_set(cfg, key.c_str(), value.c_str()) != NFRHT_OK) {
      std::fprintf(stderr, "config error: %s\n", nfrht_config_error(cfg));
      return kExitConfig;
    }
  }
  if (opt.near_field) nfrht_config_set_near_field(cfg, 1);

  size_t n_warnings = 0;
  const nfrht_status st = nfrht_config_warning_count(cfg, &n_warnings);
  if (st != NFRHT_OK) {
    std::fprintf(stderr, "config error: %s\n", nfrht_config_error(cfg));
    return exit_code_for(st);
  }
  for (size_t i = 0; i < n_warnings; ++i) {
    std::fprintf(stderr, "warning: %s\n", nfrht_config_warning(cfg, i));
  }
  return kExitOk;
}

int resolved_workers(const Options& opt) {
  if (opt.workers_given) return opt.workers;
  if (const char* env = std::getenv("NFRHT_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;
}

int run_sweep_command(const std::string& kind, const Options& opt) {
  nfrht_config* cfg = nfrht_config_create();
  if (!cfg) return kExitIo;

  int rc = apply_common(cfg, opt);
  if (rc != kExitOk) {
    nfrht_config_destroy(cfg);
    return rc;
  }
  if (nfrht_config_set_sweep_kind(cfg, kind.c_str()) != NFRHT_OK) {
    std::fprintf(stderr, "config error: %s\n", nfrht_config_error(cfg));
    nfrht_config_destroy(cfg);
    return kExitConfig;
  }

  nfrht_series* series = nullptr;
  const nfrht_status st = nfrht_run_sweep(cfg, resolved_workers(opt), &series);
  if (st != NFRHT_OK) {
    std::fprintf(stderr, "error: %s\n", nfrht_config_error(cfg));
    nfrht_config_destroy(cfg);
    return exit_code_for(st);
  }

  const size_t n = nfrht_series_size(series);
  const size_t n_failed = nfrht_series_failed_count(series);
  std::printf("%s: %zu points, %zu failed\n", kind.c_str(), n, n_failed);

  if (kind == "spectrum") {
    double xs[16];
    double vs[16];
    size_t found = 0;
    if (nfrht_series_find_peaks(series, 0.05, xs, vs, 16, &found) == NFRHT_OK) {
      const size_t shown = found < 16 ? found : 16;
      for (size_t i = 0; i < shown; ++i) {
        std::printf("peak: %s=%.6e %s=%.6e\n", nfrht_series_x_label(series), xs[i],
                    nfrht_series_value_label(series), vs[i]);
      }
    }
  }

  rc = n_failed > 0 ? kExitNumeric : kExitOk;
  if (!opt.out_path.empty()) {
    const nfrht_status wst = nfrht_series_write_csv(series, opt.out_path.c_str());
    if (wst != NFRHT_OK) {
      std::fprintf(stderr, "error: %s\n", nfrht_series_error(series));
      rc = kExitIo;
    }
  }
  if (!opt.plot_path.empty()) {
    const std::string axes = opt.axes.empty() ? default_axes(kind) : opt.axes;
    const nfrht_status pst =
        nfrht_series_write_plot(series, opt.plot_path.c_str(), axes.c_str());
    if (pst != NFRHT_OK) {
      std::fprintf(stderr, "error: %s\n", nfrht_series_error(series));
      rc = exit_code_for(pst) == kExitConfig ? kExitConfig : kExitIo;
    }
  }

  nfrht_series_destroy(series);
  nfrht_config_destroy(cfg);
  return rc;
}

int run_validate_command(const Options& opt) {
  nfrht_config* cfg = nfrht_config_create();
  if (!cfg) return kExitIo;

  int rc = apply_common(cfg, opt);
  if (rc != kExitOk) {
    nfrht_config_destroy(cfg);
    return rc;
  }

  char report[16384];
  int n_failed = 0;
  const nfrht_status st = nfrht_run_validation(cfg, report, sizeof report, &n_failed);
  if (st != NFRHT_OK) {
    std::fprintf(stderr, "error: %s\n", nfrht_config_error(cfg));
    nfrht_config_destroy(cfg);
    return exit_code_for(st);
  }
  std::fputs(report, stdout);
  std::printf("validation: %d failed\n", n_failed);
  nfrht_config_destroy(cfg);
  return n_failed > 0 ? kExitNumeric : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("radiative heat transfer calculator (nfrht ") +
               nfrht_version() + ")"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "configuration file (INI)");
    sub->add_option("--out", opt.out_path, "write the series as CSV");
    sub->add_option("--plot", opt.plot_path, "write the series as an SVG plot");
    sub->add_option("--axes", opt.axes, "plot axes: linear, loglog, semilogx");
    sub->add_option("--workers", opt.workers, "worker threads (0 = auto)")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--near-field", opt.near_field,
                  "use the quasistatic overlap instead of the full one");
    sub->add_option("--set", opt.sets, "override: section.key=value")
        ->take_all();
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "spectral density vs frequency");
  CLI::App* power_z0 = app.add_subcommand("power-z0", "total power vs height");
  CLI::App* power_w0 =
      app.add_subcommand("power-omega0", "total power vs rotation rate");
  CLI::App* density =
      app.add_subcommand("density-omega0", "spectral density vs rotation rate");
  CLI::App* validate = app.add_subcommand("validate", "run the validation suite");
  for (CLI::App* sub : {spectrum, power_z0, power_w0, density, validate}) {
    add_common(sub);
  }

  CLI11_PARSE(app, argc, argv);
  for (CLI::App* sub : {spectrum, power_z0, power_w0, density, validate}) {
    if (sub->parsed()) {
      opt.workers_given = sub->count("--workers") > 0;
    }
  }

  if (spectrum->parsed()) return run_sweep_command("spectrum", opt);
  if (power_z0->parsed()) return run_sweep_command("power_vs_z0", opt);
  if (power_w0->parsed()) return run_sweep_command("power_vs_omega0", opt);
  if (density->parsed()) return run_sweep_command("density", opt);
  if (validate->parsed()) return run_validate_command(opt);
  return kExitConfig;
}
