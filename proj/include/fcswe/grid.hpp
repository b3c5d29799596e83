#pragma once

#include <cstddef>
#include <vector>

#include "fcswe/errors.hpp"

namespace fcswe {

/// Uniform 1D grid on [x_min, x_max] with N nodes (endpoints included).
struct Grid1D {
  double x_min = 0.0;
  double x_max = 1.0;
  std::size_t n = 2;

  Grid1D() = default;
  Grid1D(double xmin, double xmax, std::size_t npts)
      : x_min(xmin), x_max(xmax), n(npts) {
    if (npts < 2 || !(xmax > xmin))
      fail(ErrorKind::InvalidConfig, "Grid1D: need x_max > x_min and N >= 2");
  }

  double dx() const { return (x_max - x_min) / static_cast<double>(n - 1); }
  double x(std::size_t i) const { return x_min + dx() * static_cast<double>(i); }

  std::vector<double> nodes() const {
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = x(i);
    return xs;
  }

  /// Nearest node index to a coordinate (clamped to the domain).
  std::size_t nearest(double xq) const {
    if (xq <= x_min) return 0;
    if (xq >= x_max) return n - 1;
    double s = (xq - x_min) / dx();
    auto i = static_cast<std::size_t>(s + 0.5);
    return i >= n ? n - 1 : i;
  }
};

/// Uniform tensor-product 2D grid.
struct Grid2D {
  Grid1D gx;
  Grid1D gy;

  Grid2D() = default;
  Grid2D(Grid1D x_axis, Grid1D y_axis) : gx(x_axis), gy(y_axis) {}
  Grid2D(double xmin, double xmax, std::size_t nx, double ymin, double ymax,
         std::size_t ny)
      : gx(xmin, xmax, nx), gy(ymin, ymax, ny) {}

  std::size_t nx() const { return gx.n; }
  std::size_t ny() const { return gy.n; }
  double dx() const { return gx.dx(); }
  double dy() const { return gy.dx(); }

  double x(std::size_t i) const { return gx.x(i); }
  double y(std::size_t j) const { return gy.x(j); }
};

}  // namespace fcswe
