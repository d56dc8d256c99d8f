#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <type_traits>
#include <utility>

#include "adw/core/error.hpp"
#include "adw/core/types.hpp"

namespace adw {

using Vec4d = std::array<double, 4>;

namespace fd_detail {

inline std::string point_str(const Vec4d& x) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "(t,x,y,z)=(%g, %g, %g, %g)", x[0], x[1], x[2], x[3]);
  return buf;
}

// Sampler exceptions get the offending point attached so a failure deep in a
// stencil is attributable.
template <class F>
auto sample(F&& f, const Vec4d& x) {
  try {
    return std::forward<F>(f)(x);
  } catch (const Error& e) {
    throw NumericalError(std::string(e.what()) + " while sampling at " + point_str(x));
  }
}

}  // namespace fd_detail

// Per-axis step for central differences, scale-aware.
inline double fd_step(const Vec4d& x, int mu, double step_scale) {
  return step_scale * (1.0 + std::abs(x[mu]));
}

// Central difference d f / d x^mu. The sampled type needs difference and
// scaling by double.
template <class F>
auto fd_partial(F&& f, Vec4d x, int mu, double h) {
  Vec4d xp = x, xm = x;
  xp[mu] += h;
  xm[mu] -= h;
  return (fd_detail::sample(f, xp) - fd_detail::sample(f, xm)) * (0.5 / h);
}

// With richardson=true, combines steps h and h/2 for fourth-order accuracy.
template <class F>
auto fd_partial(F&& f, const Vec4d& x, int mu, double step_scale, bool richardson) {
  double h = fd_step(x, mu, step_scale);
  auto d1 = fd_partial(f, x, mu, h);
  if (!richardson) return d1;
  auto d2 = fd_partial(f, x, mu, 0.5 * h);
  return (d2 * 4.0 - d1) * (1.0 / 3.0);
}

template <class F>
auto fd_gradient(F&& f, const Vec4d& x, double step_scale, bool richardson = false)
    -> std::array<decltype(f(x)), 4> {
  return {fd_partial(f, x, 0, step_scale, richardson),
          fd_partial(f, x, 1, step_scale, richardson),
          fd_partial(f, x, 2, step_scale, richardson),
          fd_partial(f, x, 3, step_scale, richardson)};
}

// Central second difference d^2 f / d (x^mu)^2.
template <class F>
auto fd_second(F&& f, const Vec4d& x, int mu, double step_scale) {
  double h = fd_step(x, mu, step_scale);
  Vec4d xp = x, xm = x;
  xp[mu] += h;
  xm[mu] -= h;
  auto c = fd_detail::sample(f, x);
  return (fd_detail::sample(f, xp) - c * 2.0 + fd_detail::sample(f, xm)) * (1.0 / (h * h));
}

// Wave operator d_tt - d_xx - d_yy - d_zz.
template <class F>
auto fd_dalembert(F&& f, const Vec4d& x, double step_scale) {
  auto r = fd_second(f, x, 0, step_scale);
  for (int mu = 1; mu < 4; ++mu) r = r - fd_second(f, x, mu, step_scale);
  return r;
}

}  // namespace adw
