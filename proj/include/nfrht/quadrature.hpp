#pragma once

// Adaptive Gauss-Kronrod 7-15 quadrature for small fixed-size vector
// integrands. Panels never sample their endpoints, so integrable endpoint
// behavior is tolerated. The subdivision loop is fully deterministic: the
// worst panel is chosen by error with ties broken toward the leftmost
// interval, so results are bit-reproducible across runs.
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace nfrht {

// Tolerances and cutoffs shared by the spectral integrations.
struct QuadratureConfig {
  double rel_tol = 1e-6;
  double abs_tol_floor = 1e-30;
  double k_cutoff_factor = 40.0;  // evanescent cutoff at k_cutoff_factor / z0
  int max_subdivisions = 60;      // subdivision budget per seeded panel
};

namespace quad {

// Kronrod 15 abscissae on [0, 1]; Gauss 7 points sit at the odd indices plus
// the center.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};

inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};

inline constexpr std::array<double, 4> kWg = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

class KahanSum {
 public:
  void add(double x) {
    const double y = x - comp_;
    const double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

template <int N>
struct Panel {
  double a;
  double b;
  std::array<double, N> value;   // K15 estimate
  std::array<double, N> error;   // scaled |K15 - G7| estimate
  std::array<double, N> resabs;  // K15 estimate of integral of |f|
};

template <int N>
struct Result {
  std::array<double, N> value{};
  std::array<double, N> error{};
  bool converged = false;
  int subdivisions = 0;
  std::vector<Panel<N>> panels;
};

// One G7-K15 evaluation over [a, b]. The error estimate follows the usual
// rescaling against the deviation integral so it stays sharp for smooth
// integrands without collapsing to zero for rough ones.
template <int N, typename F>
Panel<N> gk15_panel(F&& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  std::array<std::array<double, N>, 7> fv1{};
  std::array<std::array<double, N>, 7> fv2{};
  const std::array<double, N> fc = f(center);

  std::array<double, N> resk{};
  std::array<double, N> resg{};
  std::array<double, N> resabs{};
  for (int c = 0; c < N; ++c) {
    resk[c] = kWgk[7] * fc[c];
    resg[c] = kWg[3] * fc[c];
    resabs[c] = kWgk[7] * std::abs(fc[c]);
  }

  for (int j = 0; j < 7; ++j) {
    fv1[j] = f(center - h * kXgk[j]);
    fv2[j] = f(center + h * kXgk[j]);
    for (int c = 0; c < N; ++c) {
      const double fsum = fv1[j][c] + fv2[j][c];
      resk[c] += kWgk[j] * fsum;
      resabs[c] += kWgk[j] * (std::abs(fv1[j][c]) + std::abs(fv2[j][c]));
      if (j % 2 == 1) resg[c] += kWg[j / 2] * fsum;
    }
  }

  Panel<N> p{};
  p.a = a;
  p.b = b;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int c = 0; c < N; ++c) {
    const double reskh = 0.5 * resk[c];
    double resasc = kWgk[7] * std::abs(fc[c] - reskh);
    for (int j = 0; j < 7; ++j) {
      resasc += kWgk[j] *
                (std::abs(fv1[j][c] - reskh) + std::abs(fv2[j][c] - reskh));
    }
    resasc *= h;
    const double rabs = resabs[c] * h;

    double err = std::abs(resk[c] - resg[c]) * h;
    if (resasc != 0.0 && err != 0.0) {
      err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    err = std::max(err, 50.0 * eps * rabs);

    p.value[c] = resk[c] * h;
    p.error[c] = err;
    p.resabs[c] = rabs;
  }
  return p;
}

// Adaptive driver. `nodes` seeds one panel per consecutive pair (known
// breakpoints of the integrand belong in this list). The subdivision budget
// scales with the seed count. Only the first n_check components steer
// refinement and convergence; the rest are carried along.
template <int N, typename F>
Result<N> integrate(F&& f, std::span<const double> nodes, double rel_tol,
                    double abs_tol_floor, int max_subdivisions, int n_check = N) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  Result<N> res;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (nodes[i + 1] > nodes[i]) {
      res.panels.push_back(gk15_panel<N>(f, nodes[i], nodes[i + 1]));
    }
  }
  if (res.panels.empty()) {
    res.converged = true;
    return res;
  }

  const int budget = max_subdivisions * static_cast<int>(res.panels.size());

  auto totals_converged = [&]() {
    std::array<double, N> tot{};
    std::array<double, N> toterr{};
    std::array<double, N> totabs{};
    for (const auto& p : res.panels) {
      for (int c = 0; c < N; ++c) {
        tot[c] += p.value[c];
        toterr[c] += p.error[c];
        totabs[c] += p.resabs[c];
      }
    }
    for (int c = 0; c < n_check; ++c) {
      const double threshold =
          std::max(rel_tol * std::abs(tot[c]), abs_tol_floor * totabs[c]);
      if (toterr[c] > threshold) return false;
    }
    return true;
  };

  while (res.subdivisions < budget && !totals_converged()) {
    int worst = -1;
    double worst_err = -1.0;
    double worst_a = 0.0;
    for (std::size_t i = 0; i < res.panels.size(); ++i) {
      const auto& p = res.panels[i];
      const double width = p.b - p.a;
      if (width < 50.0 * eps * std::max(std::abs(p.a), std::abs(p.b))) continue;
      double e = 0.0;
      for (int c = 0; c < n_check; ++c) e = std::max(e, p.error[c]);
      if (e > worst_err || (e == worst_err && p.a < worst_a)) {
        worst = static_cast<int>(i);
        worst_err = e;
        worst_a = p.a;
      }
    }
    if (worst < 0) break;

    const double a = res.panels[worst].a;
    const double b = res.panels[worst].b;
    const double mid = 0.5 * (a + b);
    res.panels[worst] = gk15_panel<N>(f, a, mid);
    res.panels.push_back(gk15_panel<N>(f, mid, b));
    ++res.subdivisions;
  }

  res.converged = totals_converged();

  std::sort(res.panels.begin(), res.panels.end(),
            [](const Panel<N>& x, const Panel<N>& y) { return x.a < y.a; });
  for (int c = 0; c < N; ++c) {
    KahanSum v;
    KahanSum e;
    for (const auto& p : res.panels) {
      v.add(p.value[c]);
      e.add(p.error[c]);
    }
    res.value[c] = v.value();
    res.error[c] = e.value();
  }
  return res;
}

}  // namespace quad
}  // namespace nfrht
