#pragma once

#include <cmath>
#include <string>

#include "cilab/field.hpp"

namespace cilab {

// Discrete realizations of the sup/integral norms used by the iteration
// estimates.  c0/c1/c2 are independent quantities (field, first and second
// centered differences), not cumulative Hoelder norms.
struct NormReport {
  double c0 = 0;  // sup |f|
  double c1 = 0;  // sup |first centered difference|
  double c2 = 0;  // sup |second centered difference| (incl. mixed)
  double l1 = 0;
  double l2 = 0;
  double tv = 0;  // 1-D only, see tv_wrap convention

  std::string json() const;
};

namespace detail {

inline int wrap(int i, int n) { return i >= n ? i - n : (i < 0 ? i + n : i); }

// first difference along axis (0 = x1, 1 = x2); one-sided at clamped edges
inline double diff1(const Field& f, int t, int c, int j, int i, int axis) {
  const Grid& g = f.grid();
  const int n = g.resolution;
  const double h = g.spacing();
  int ip = i, im = i, jp = j, jm = j;
  if (axis == 0) { ip = i + 1; im = i - 1; } else { jp = j + 1; jm = j - 1; }
  if (g.periodic()) {
    return (f.at(t, c, wrap(jp, n), wrap(ip, n)) -
            f.at(t, c, wrap(jm, n), wrap(im, n))) / (2 * h);
  }
  int hi = axis == 0 ? ip : jp, lo = axis == 0 ? im : jm;
  if (hi >= n) {  // one-sided
    return (f.at(t, c, std::min(j, n - 1), std::min(i, n - 1)) -
            f.at(t, c, axis == 1 ? j - 1 : j, axis == 0 ? i - 1 : i)) / h;
  }
  if (lo < 0) {
    return (f.at(t, c, axis == 1 ? j + 1 : j, axis == 0 ? i + 1 : i) -
            f.at(t, c, j, i)) / h;
  }
  return (f.at(t, c, jp, ip) - f.at(t, c, jm, im)) / (2 * h);
}

inline double diff2_pure(const Field& f, int t, int c, int j, int i, int axis) {
  const Grid& g = f.grid();
  const int n = g.resolution;
  const double h = g.spacing();
  int ip = i, im = i, jp = j, jm = j;
  if (axis == 0) { ip = i + 1; im = i - 1; } else { jp = j + 1; jm = j - 1; }
  if (!g.periodic()) {
    // shift the stencil inward at edges
    if (axis == 0) {
      if (ip >= n) { ip = n - 1; im = n - 3; i = n - 2; }
      if (im < 0) { im = 0; ip = 2; i = 1; }
    } else {
      if (jp >= n) { jp = n - 1; jm = n - 3; j = n - 2; }
      if (jm < 0) { jm = 0; jp = 2; j = 1; }
    }
    return (f.at(t, c, jp, ip) - 2 * f.at(t, c, j, i) + f.at(t, c, jm, im)) / (h * h);
  }
  return (f.at(t, c, wrap(jp, n), wrap(ip, n)) - 2 * f.at(t, c, j, i) +
          f.at(t, c, wrap(jm, n), wrap(im, n))) / (h * h);
}

inline double diff2_mixed(const Field& f, int t, int c, int j, int i) {
  const Grid& g = f.grid();
  const int n = g.resolution;
  const double h = g.spacing();
  auto v = [&](int jj, int ii) {
    if (g.periodic()) return f.at(t, c, wrap(jj, n), wrap(ii, n));
    jj = std::clamp(jj, 0, n - 1);
    ii = std::clamp(ii, 0, n - 1);
    return f.at(t, c, jj, ii);
  };
  return (v(j + 1, i + 1) - v(j + 1, i - 1) - v(j - 1, i + 1) + v(j - 1, i - 1)) /
         (4 * h * h);
}

}  // namespace detail

// Total variation of 1-D samples.  Periodic convention counts the wrap jump.
inline double total_variation_1d(const Field& f, int t = 0, int c = 0,
                                 bool count_wrap = true) {
  const Grid& g = f.grid();
  if (g.dims != 1) throw std::invalid_argument("tv: 1-D fields only");
  const int n = g.resolution;
  double tv = 0;
  for (int i = 0; i + 1 < n; ++i) tv += std::abs(f.at1(t, c, i + 1) - f.at1(t, c, i));
  if (count_wrap && g.periodic()) tv += std::abs(f.at1(t, c, 0) - f.at1(t, c, n - 1));
  return tv;
}

inline NormReport discrete_norms(const Field& f) {
  const Grid& g = f.grid();
  const int n = g.resolution;
  const int ny = g.dims == 1 ? 1 : n;
  NormReport r;
  double sum1 = 0, sum2 = 0;
  for (int t = 0; t < g.time_samples; ++t)
    for (int c = 0; c < f.comps(); ++c)
      for (int j = 0; j < ny; ++j)
        for (int i = 0; i < n; ++i) {
          double v = f.at(t, c, j, i);
          r.c0 = std::max(r.c0, std::abs(v));
          sum1 += std::abs(v);
          sum2 += v * v;
          double g1 = 0, g2 = 0;
          g1 = detail::diff1(f, t, c, j, i, 0);
          double d2 = std::abs(detail::diff2_pure(f, t, c, j, i, 0));
          if (g.dims == 2) {
            g2 = detail::diff1(f, t, c, j, i, 1);
            d2 = std::max(d2, std::abs(detail::diff2_pure(f, t, c, j, i, 1)));
            d2 = std::max(d2, std::abs(detail::diff2_mixed(f, t, c, j, i)));
          }
          r.c1 = std::max(r.c1, std::sqrt(g1 * g1 + g2 * g2));
          r.c2 = std::max(r.c2, d2);
        }
  const double cell = std::pow(g.spacing(), g.dims) / std::max(1, g.time_samples);
  r.l1 = sum1 * cell;
  r.l2 = std::sqrt(sum2 * cell);
  if (g.dims == 1) r.tv = total_variation_1d(f, 0, 0, g.periodic());
  return r;
}

inline std::string NormReport::json() const {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "{\"c0\":%.17g,\"c1\":%.17g,\"c2\":%.17g,\"l1\":%.17g,"
                "\"l2\":%.17g,\"tv\":%.17g}",
                c0, c1, c2, l1, l2, tv);
  return buf;
}

}  // namespace cilab
