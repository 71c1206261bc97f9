#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cilab {

enum class BoundaryMode { Periodic, Clamped };

// Uniform grid on [0,period)^dims, optionally carrying a time axis.
// Samples sit at cell centers: x_i = (i + 1/2) * period / resolution,
// t_j = time_origin + j * time_step.
struct Grid {
  int dims = 2;                 // spatial dimension, 1 or 2
  int resolution = 64;          // samples per axis, power of two, >= 8
  double period = 1.0;
  BoundaryMode boundary = BoundaryMode::Periodic;
  int time_samples = 1;
  double time_step = 0.0;
  double time_origin = 0.0;

  void validate() const {
    if (dims != 1 && dims != 2)
      throw std::invalid_argument("grid: dims must be 1 or 2");
    if (resolution < 8)
      throw std::invalid_argument("grid: resolution < 8");
    if ((resolution & (resolution - 1)) != 0)
      throw std::invalid_argument("grid: resolution must be a power of two");
    if (period <= 0.0)
      throw std::invalid_argument("grid: period must be positive");
    if (time_samples < 1)
      throw std::invalid_argument("grid: time_samples < 1");
  }

  double spacing() const { return period / resolution; }
  std::size_t npoints() const {
    std::size_t n = static_cast<std::size_t>(resolution);
    return dims == 1 ? n : n * n;
  }
  std::size_t nspacetime() const { return npoints() * time_samples; }

  double x(int i) const { return (i + 0.5) * spacing(); }
  double t(int j) const { return time_origin + j * time_step; }

  bool periodic() const { return boundary == BoundaryMode::Periodic; }

  bool same_layout(const Grid& o) const {
    return dims == o.dims && resolution == o.resolution && period == o.period &&
           boundary == o.boundary && time_samples == o.time_samples;
  }
};

inline Grid make_grid(int resolution, int dims = 2, double period = 1.0) {
  Grid g;
  g.dims = dims;
  g.resolution = resolution;
  g.period = period;
  g.validate();
  return g;
}

inline Grid make_spacetime_grid(int resolution, int time_samples, double t0,
                                double t1, int dims = 2, double period = 1.0) {
  Grid g;
  g.dims = dims;
  g.resolution = resolution;
  g.period = period;
  g.time_samples = time_samples;
  g.time_origin = t0;
  g.time_step = time_samples > 1 ? (t1 - t0) / (time_samples - 1) : 0.0;
  g.validate();
  return g;
}

}  // namespace cilab
