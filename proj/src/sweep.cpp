// Sweep grids and multithreaded evaluation.
#include "nfrht/sweep.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "nfrht/errors.hpp"

namespace nfrht {

SweepSpec default_sweep(SweepKind kind) {
  SweepSpec s{};
  s.kind = kind;
  switch (kind) {
    case SweepKind::spectrum:
      s.min = 1.5e14;
      s.max = 1.9e14;
      s.count = 400;
      s.spacing = GridSpacing::linear;
      break;
    case SweepKind::power_vs_z0:
      s.min = 1e-9;
      s.max = 1e-7;
      s.count = 20;
      s.spacing = GridSpacing::log;
      break;
    case SweepKind::power_vs_omega0:
      s.min = 1e9;
      s.max = 1e15;
      s.count = 25;
      s.spacing = GridSpacing::log;
      break;
    case SweepKind::density:
      s.min = 1e9;
      s.max = 1e15;
      s.count = 400;
      s.spacing = GridSpacing::log;
      break;
  }
  return s;
}

std::size_t SweepSeries::failed_count() const {
  std::size_t n = 0;
  for (const auto& r : rows) {
    if (r.failed) ++n;
  }
  return n;
}

std::vector<double> make_grid(double min, double max, int count, GridSpacing spacing) {
  std::vector<double> g(static_cast<std::size_t>(count));
  const int last = count - 1;
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / last;
    g[static_cast<std::size_t>(i)] =
        spacing == GridSpacing::linear
            ? min + (max - min) * t
            : min * std::pow(max / min, t);
  }
  g.front() = min;
  g.back() = max;
  return g;
}

namespace {

void label_series(SweepSeries& s, const SweepSpec& spec) {
  switch (spec.kind) {
    case SweepKind::spectrum:
      s.abscissa_name = "omega";
      s.abscissa_units = "rad/s";
      s.value_name = "spectral_power_density";
      s.value_units = "W s";
      s.title = "Spectral power density";
      break;
    case SweepKind::power_vs_z0:
      s.abscissa_name = "z0";
      s.abscissa_units = "m";
      s.value_name = "total_power";
      s.value_units = "W";
      s.title = "Total power vs height";
      break;
    case SweepKind::power_vs_omega0:
      s.abscissa_name = "omega0";
      s.abscissa_units = "rad/s";
      s.value_name = "total_power";
      s.value_units = "W";
      s.title = "Total power vs rotation rate";
      break;
    case SweepKind::density:
      s.abscissa_name = "omega0";
      s.abscissa_units = "rad/s";
      s.value_name = "spectral_power_density";
      s.value_units = "W s";
      s.title = "Spectral density vs rotation rate";
      break;
  }
}

SweepRow evaluate_point(const SweepSpec& spec, const ScenarioConfig& base, double x) {
  SweepRow row{};
  row.x = x;
  ScenarioConfig sc = base;
  switch (spec.kind) {
    case SweepKind::spectrum: {
      const SpectralResult r = spectral_power_density(sc, x);
      row.value = r.power_density;
      row.error_estimate = r.error_estimate;
      return row;
    }
    case SweepKind::power_vs_z0:
      sc.particle.height_z0 = x;
      break;
    case SweepKind::power_vs_omega0:
      sc.particle.omega0 = x;
      break;
    case SweepKind::density: {
      sc.particle.omega0 = x;
      const SpectralResult r = spectral_power_density(sc, spec.at_omega);
      row.value = r.power_density;
      row.error_estimate = r.error_estimate;
      return row;
    }
  }
  const TotalPower p = total_power(sc);
  if (!p.converged) {
    throw NonConvergenceError("total power quadrature did not converge");
  }
  row.value = p.power;
  row.error_estimate = p.error_estimate;
  return row;
}

}  // namespace

SweepSeries run_sweep(const SweepSpec& spec, const ScenarioConfig& scenario,
                      int workers) {
  SweepSeries series;
  label_series(series, spec);

  const std::vector<double> grid =
      make_grid(spec.min, spec.max, spec.count, spec.spacing);
  series.rows.resize(grid.size());

  unsigned n_workers = workers > 0 ? static_cast<unsigned>(workers)
                                   : std::thread::hardware_concurrency();
  if (n_workers == 0) n_workers = 1;
  n_workers = std::min<unsigned>(n_workers, static_cast<unsigned>(grid.size()));

  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();

  auto work = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= grid.size() || abort.load()) return;
      try {
        series.rows[i] = evaluate_point(spec, scenario, grid[i]);
      } catch (const NumericError&) {
        series.rows[i] = SweepRow{grid[i], nan, nan, true};
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        abort.store(true);
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (unsigned t = 0; t < n_workers; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  if (first_error) std::rethrow_exception(first_error);
  return series;
}

}  // namespace nfrht
