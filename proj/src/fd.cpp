#include "fcswe/fd.hpp"

#include <array>

#include "fcswe/errors.hpp"

namespace fcswe {

namespace {

// Lagrange extrapolation weights: value at position `at` of the polynomial
// through nodes 0..n_nodes-1 (unit spacing).
std::vector<double> lagrange_weights(std::size_t n_nodes, double at) {
  std::vector<double> w(n_nodes, 1.0);
  for (std::size_t j = 0; j < n_nodes; ++j) {
    for (std::size_t k = 0; k < n_nodes; ++k) {
      if (k == j) continue;
      w[j] *= (at - static_cast<double>(k)) /
              (static_cast<double>(j) - static_cast<double>(k));
    }
  }
  return w;
}

}  // namespace

void fd_derivative(std::span<const double> f, double dx, FdOrder order,
                   std::span<double> df) {
  if (order.order != 4 && order.order != 6)
    fail(ErrorKind::InvalidConfig, "fd_derivative: order must be 4 or 6");
  const std::size_t n = f.size();
  const unsigned hw = order.half_width();
  const std::size_t n_nodes = order.order + 1;
  if (n <= 2 * hw || n < n_nodes)
    fail(ErrorKind::GridTooCoarse, "fd_derivative: too few points for the stencil");

  // Ghost values from degree-(order) extrapolation of the nearest nodes.
  std::array<double, 3> ghost_lo{}, ghost_hi{};
  for (unsigned g = 1; g <= hw; ++g) {
    auto w = lagrange_weights(n_nodes, -static_cast<double>(g));
    double lo = 0.0, hi = 0.0;
    for (std::size_t j = 0; j < n_nodes; ++j) {
      lo += w[j] * f[j];
      hi += w[j] * f[n - 1 - j];
    }
    ghost_lo[g - 1] = lo;
    ghost_hi[g - 1] = hi;
  }

  auto value = [&](std::ptrdiff_t i) -> double {
    if (i < 0) return ghost_lo[static_cast<std::size_t>(-i) - 1];
    if (i >= static_cast<std::ptrdiff_t>(n))
      return ghost_hi[static_cast<std::size_t>(i - static_cast<std::ptrdiff_t>(n))];
    return f[static_cast<std::size_t>(i)];
  };

  if (order.order == 4) {
    const double s = 1.0 / (12.0 * dx);
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
      df[i] = s * (value(i - 2) - 8.0 * value(i - 1) + 8.0 * value(i + 1) - value(i + 2));
  } else {
    const double s = 1.0 / (60.0 * dx);
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
      df[i] = s * (-value(i - 3) + 9.0 * value(i - 2) - 45.0 * value(i - 1) +
                   45.0 * value(i + 1) - 9.0 * value(i + 2) + value(i + 3));
  }
}

std::vector<double> fd_derivative(std::span<const double> f, double dx, FdOrder order) {
  std::vector<double> out(f.size());
  fd_derivative(f, dx, order, out);
  return out;
}

Field2D fd_derivative_2d(const Field2D& f, Axis axis, double spacing, FdOrder order) {
  Field2D out(f.nx(), f.ny());
  const std::size_t nx = f.nx(), ny = f.ny();
  if (axis == Axis::X) {
    std::vector<double> slice(nx), dslice(nx);
    for (std::size_t iy = 0; iy < ny; ++iy) {
      for (std::size_t ix = 0; ix < nx; ++ix) slice[ix] = f(ix, iy);
      fd_derivative(slice, spacing, order, dslice);
      for (std::size_t ix = 0; ix < nx; ++ix) out(ix, iy) = dslice[ix];
    }
  } else {
    std::vector<double> dslice(ny);
    for (std::size_t ix = 0; ix < nx; ++ix) {
      fd_derivative(std::span<const double>(f.data() + ix * ny, ny), spacing, order, dslice);
      for (std::size_t iy = 0; iy < ny; ++iy) out(ix, iy) = dslice[iy];
    }
  }
  return out;
}

}  // namespace fcswe
