#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "fcswe/errors.hpp"
#include "fcswe/grid.hpp"

namespace fcswe {

enum class Axis { X, Y };

/// Row-major 2D array indexed (ix, iy).
class Field2D {
 public:
  Field2D() = default;
  Field2D(std::size_t nx, std::size_t ny, double fill = 0.0)
      : nx_(nx), ny_(ny), data_(nx * ny, fill) {}

  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return ny_; }
  std::size_t size() const { return data_.size(); }

  double& operator()(std::size_t ix, std::size_t iy) { return data_[ix * ny_ + iy]; }
  double operator()(std::size_t ix, std::size_t iy) const { return data_[ix * ny_ + iy]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  std::vector<double>& raw() { return data_; }
  const std::vector<double>& raw() const { return data_; }

 private:
  std::size_t nx_ = 0, ny_ = 0;
  std::vector<double> data_;
};

struct PhysConstants {
  double g = 9.81;  // m/s^2
};

struct State1D {
  std::vector<double> eta;  // free-surface displacement (m)
  std::vector<double> u;    // velocity (m/s)

  State1D() = default;
  explicit State1D(std::size_t n) : eta(n, 0.0), u(n, 0.0) {}
  std::size_t n() const { return eta.size(); }
};

struct State2D {
  Field2D eta;
  Field2D u;
  Field2D v;

  State2D() = default;
  State2D(std::size_t nx, std::size_t ny) : eta(nx, ny), u(nx, ny), v(nx, ny) {}
  std::size_t nx() const { return eta.nx(); }
  std::size_t ny() const { return eta.ny(); }
};

/// Still-water depth (positive-depth convention) and its spatial gradient.
struct Bathymetry1D {
  std::vector<double> h0;
  std::vector<double> h0_x;
};

struct Bathymetry2D {
  Field2D h0;
  Field2D h0_x;
  Field2D h0_y;
};

inline bool all_finite(const std::vector<double>& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace fcswe
