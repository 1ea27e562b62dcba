#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <queue>
#include <vector>

#include "biortho/errors.hpp"

namespace biortho {

namespace detail {

// Gauss-Kronrod 7/15 nodes on [-1, 1] (positive half, centre last).
inline constexpr std::array<double, 8> kKronrodX = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> kKronrodW = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for Kronrod nodes 1, 3, 5 and the centre.
inline constexpr std::array<double, 4> kGaussW = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
struct Panel {
  double a, b;
  T value;
  double err;
  bool operator<(const Panel& o) const { return err < o.err; }
};

template <class T, class F>
Panel<T> gk15(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const T fc = f(c);
  T kron = fc * kKronrodW[7];
  T gauss = fc * kGaussW[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = h * kKronrodX[i];
    const T sum = f(c - dx) + f(c + dx);
    kron += sum * kKronrodW[i];
    if (i % 2 == 1) gauss += sum * kGaussW[i / 2];
  }
  return {a, b, kron * h, std::abs((kron - gauss) * h)};
}

}  // namespace detail

struct QuadratureStats {
  long panels = 0;
  double error = 0.0;
};

/// Globally adaptive Gauss-Kronrod 7/15 integration of f over [a, b]. The
/// panel with the largest error estimate is bisected until the summed
/// estimate drops below abs_tol. Throws NonConvergence past max_panels.
template <class T, class F>
T integrate_gk(F&& f, double a, double b, double abs_tol, int initial_panels = 8, QuadratureStats* stats = nullptr,
               long max_panels = 200000) {
  std::priority_queue<detail::Panel<T>> heap;
  double err = 0.0;
  const double width = (b - a) / initial_panels;
  for (int i = 0; i < initial_panels; ++i) {
    const double lo = a + width * i;
    const double hi = (i + 1 == initial_panels) ? b : lo + width;
    auto panel = detail::gk15<T>(f, lo, hi);
    err += panel.err;
    heap.push(std::move(panel));
  }
  while (err > abs_tol) {
    if (static_cast<long>(heap.size()) >= max_panels) {
      throw NonConvergence("adaptive quadrature exceeded its panel budget");
    }
    const auto worst = heap.top();
    heap.pop();
    const double m = 0.5 * (worst.a + worst.b);
    if (!(m > worst.a && m < worst.b)) throw NonConvergence("adaptive quadrature panel collapsed");
    auto l = detail::gk15<T>(f, worst.a, m);
    auto r = detail::gk15<T>(f, m, worst.b);
    err += l.err + r.err - worst.err;
    heap.push(std::move(l));
    heap.push(std::move(r));
  }
  // Sum in a fixed order (by left endpoint) for reproducibility.
  std::vector<detail::Panel<T>> panels;
  panels.reserve(heap.size());
  while (!heap.empty()) {
    panels.push_back(heap.top());
    heap.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
  T total{};
  double final_err = 0.0;
  for (const auto& p : panels) {
    total += p.value;
    final_err += p.err;
  }
  if (stats) {
    stats->panels = static_cast<long>(panels.size());
    stats->error = final_err;
  }
  return total;
}

}  // namespace biortho
