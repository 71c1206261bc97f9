#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <vector>

#include "cilab/grid.hpp"

namespace cilab {

// Sampled field with `comps` components per grid point.
// Layout: value(t, c, j, i) with i (x1) fastest, then j (x2), then component,
// then time slice.  For 1-D grids j is ignored.
class Field {
 public:
  Field() = default;
  Field(Grid grid, int comps) : grid_(grid), comps_(comps) {
    grid_.validate();
    if (comps < 1) throw std::invalid_argument("field: comps < 1");
    data_.assign(grid_.nspacetime() * comps_, 0.0);
  }

  const Grid& grid() const { return grid_; }
  int comps() const { return comps_; }
  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  double& at(int t, int c, int j, int i) { return data_[index(t, c, j, i)]; }
  double at(int t, int c, int j, int i) const { return data_[index(t, c, j, i)]; }

  // 1-D convenience
  double& at1(int t, int c, int i) { return data_[index(t, c, 0, i)]; }
  double at1(int t, int c, int i) const { return data_[index(t, c, 0, i)]; }

  std::size_t index(int t, int c, int j, int i) const {
    const std::size_t n = grid_.resolution;
    const std::size_t plane = grid_.npoints();
    std::size_t spatial = grid_.dims == 1 ? static_cast<std::size_t>(i)
                                          : static_cast<std::size_t>(j) * n + i;
    return (static_cast<std::size_t>(t) * comps_ + c) * plane + spatial;
  }

  // pointer to the start of one (t, c) spatial slab
  double* slab(int t, int c) { return data_.data() + index(t, c, 0, 0); }
  const double* slab(int t, int c) const { return data_.data() + index(t, c, 0, 0); }

  void fill(std::function<double(double, double, double, int)> f) {
    // f(x1, x2, t, comp)
    const int n = grid_.resolution;
    const int ny = grid_.dims == 1 ? 1 : n;
    for (int t = 0; t < grid_.time_samples; ++t)
      for (int c = 0; c < comps_; ++c)
        for (int j = 0; j < ny; ++j)
          for (int i = 0; i < n; ++i)
            at(t, c, j, i) = f(grid_.x(i), grid_.dims == 1 ? 0.0 : grid_.x(j),
                               grid_.t(t), c);
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  Field& operator+=(const Field& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Field& operator-=(const Field& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Field& operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
  }

 private:
  void check_same(const Field& o) const {
    if (!grid_.same_layout(o.grid_) || comps_ != o.comps_)
      throw std::invalid_argument("field: layout mismatch");
  }
  Grid grid_;
  int comps_ = 1;
  std::vector<double> data_;
};

struct ScalarField : Field {
  ScalarField() = default;
  explicit ScalarField(Grid g) : Field(g, 1) {}
};

// Vector field with codomain dimension m (defaults to the grid dimension).
struct VectorField : Field {
  VectorField() = default;
  explicit VectorField(Grid g, int m = -1) : Field(g, m < 0 ? g.dims : m) {}
};

// Symmetric tensor field; n(n+1)/2 independent entries.
// For n=2 the component order is (s11, s12, s22).
struct SymTensorField : Field {
  SymTensorField() = default;
  explicit SymTensorField(Grid g, bool traceless = false)
      : Field(g, g.dims * (g.dims + 1) / 2), traceless_(traceless) {}

  bool traceless() const { return traceless_; }

  // max |trace| over all samples (2-D only)
  double max_trace() const {
    if (grid().dims != 2) return 0.0;
    double m = 0.0;
    for (int t = 0; t < grid().time_samples; ++t) {
      const double* s11 = slab(t, 0);
      const double* s22 = slab(t, 2);
      for (std::size_t k = 0; k < grid().npoints(); ++k)
        m = std::max(m, std::abs(s11[k] + s22[k]));
    }
    return m;
  }

  void check_traceless(double rel_tol = 1e-12) const {
    if (!traceless_) return;
    double scale = std::max(max_abs(), 1e-300);
    if (max_trace() > rel_tol * scale)
      throw std::invalid_argument("sym tensor: traceless flag violated");
  }

 private:
  bool traceless_ = false;
};

// Symmetric 2x2 matrix helpers used throughout.
struct Sym2 {
  double a11 = 0, a12 = 0, a22 = 0;
  double trace() const { return a11 + a22; }
  double det() const { return a11 * a22 - a12 * a12; }
  double lambda_max() const {
    double m = 0.5 * (a11 + a22);
    double r = std::sqrt(0.25 * (a11 - a22) * (a11 - a22) + a12 * a12);
    return m + r;
  }
  double lambda_min() const {
    double m = 0.5 * (a11 + a22);
    double r = std::sqrt(0.25 * (a11 - a22) * (a11 - a22) + a12 * a12);
    return m - r;
  }
  Sym2 operator-(const Sym2& o) const { return {a11 - o.a11, a12 - o.a12, a22 - o.a22}; }
  Sym2 operator+(const Sym2& o) const { return {a11 + o.a11, a12 + o.a12, a22 + o.a22}; }
};

inline Sym2 outer2(double v1, double v2) { return {v1 * v1, v1 * v2, v2 * v2}; }

}  // namespace cilab
