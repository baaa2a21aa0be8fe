#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxmom/config.hpp"

namespace boxmom {

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_panels = 200000;
  // When positive, the interval is pre-split into panels of half this width
  // so oscillations are resolved before adaptive refinement starts. Without
  // the pre-split a coarse first pass can alias a fast oscillation and
  // report false convergence.
  double period_hint = 0.0;
};

struct QuadratureResult {
  complex value{};
  double error_estimate = 0.0;
  int panel_count = 0;
  bool converged = false;
};

// Thrown by operations that need a converged integral when the panel budget
// runs out first. Carries the error estimate actually reached.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& where, double achieved)
      : std::runtime_error(where + ": quadrature did not converge, achieved error estimate " +
                           std::to_string(achieved)),
        achieved_error(achieved) {}
  double achieved_error;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (QUADPACK dqk15 values).
// The embedded 7-point Gauss rule sits on the odd-index nodes plus center.
inline constexpr double gk_node[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double gk_weight[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double gauss_weight[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo = 0.0, hi = 0.0;
  complex value{};
  double err = 0.0;
};

template <class F>
Panel gk15_panel(F& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  const complex fc = f(mid);
  complex kron = gk_weight[7] * fc;
  complex gauss = gauss_weight[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const complex pair = complex(f(mid - h * gk_node[i])) + complex(f(mid + h * gk_node[i]));
    kron += gk_weight[i] * pair;
    if (i % 2 == 1) gauss += gauss_weight[(i - 1) / 2] * pair;
  }
  return Panel{lo, hi, h * kron, h * std::abs(kron - gauss)};
}

inline bool panel_splittable(const Panel& p) {
  const double floor = 8.0 * 2.22e-16 * std::max(std::abs(p.lo), std::abs(p.hi)) + 1e-305;
  return (p.hi - p.lo) > floor;
}

}  // namespace detail

// Adaptive Gauss-Kronrod 7-15 with worst-panel-first bisection. f maps a
// double to complex (or anything convertible). Converged when the summed
// panel error drops under max(abs_tol, rel_tol * |value|); otherwise the
// best estimate comes back with converged = false and the caller decides.
template <class F>
QuadratureResult adaptive_quadrature(F&& f, double lo, double hi,
                                     const QuadratureOptions& opt = {}) {
  QuadratureResult out;
  if (lo == hi) {
    out.converged = true;
    return out;
  }
  double sign = 1.0;
  if (lo > hi) {
    std::swap(lo, hi);
    sign = -1.0;
  }

  auto worse = [](const detail::Panel& x, const detail::Panel& y) { return x.err < y.err; };

  std::vector<detail::Panel> heap;
  std::vector<detail::Panel> frozen;  // panels at roundoff width, not refinable
  int initial = 1;
  if (opt.period_hint > 0.0) {
    initial = static_cast<int>(std::ceil((hi - lo) / (0.5 * opt.period_hint)));
    initial = std::clamp(initial, 1, std::max(1, opt.max_panels / 2));
  }
  heap.reserve(static_cast<size_t>(initial) + 64);
  complex total{};
  double err_active = 0.0;
  double err_frozen = 0.0;
  for (int i = 0; i < initial; ++i) {
    const double x0 = lo + (hi - lo) * (static_cast<double>(i) / initial);
    const double x1 = (i + 1 == initial) ? hi : lo + (hi - lo) * (static_cast<double>(i + 1) / initial);
    heap.push_back(detail::gk15_panel(f, x0, x1));
    total += heap.back().value;
    err_active += heap.back().err;
  }
  std::make_heap(heap.begin(), heap.end(), worse);

  int panels = initial;
  while (true) {
    const double err = err_active + err_frozen;
    const double goal = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
    if (err <= goal) {
      out.converged = true;
      break;
    }
    if (panels + 1 >= opt.max_panels || heap.empty()) break;

    std::pop_heap(heap.begin(), heap.end(), worse);
    const detail::Panel top = heap.back();
    heap.pop_back();
    if (!detail::panel_splittable(top)) {
      err_active -= top.err;
      err_frozen += top.err;
      frozen.push_back(top);
      continue;
    }
    const double mid = 0.5 * (top.lo + top.hi);
    detail::Panel left = detail::gk15_panel(f, top.lo, mid);
    detail::Panel right = detail::gk15_panel(f, mid, top.hi);
    total += left.value + right.value - top.value;
    err_active += left.err + right.err - top.err;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), worse);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), worse);
    ++panels;
  }

  // Exact resummation removes the drift the incremental updates accumulate.
  total = complex{};
  double err = 0.0;
  for (const detail::Panel& p : frozen) {
    total += p.value;
    err += p.err;
  }
  for (const detail::Panel& p : heap) {
    total += p.value;
    err += p.err;
  }
  out.value = sign * total;
  out.error_estimate = err;
  out.panel_count = panels;
  return out;
}

}  // namespace boxmom
