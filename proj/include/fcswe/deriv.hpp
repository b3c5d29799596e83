#pragma once

#include <memory>
#include <span>
#include <string>

#include "fcswe/fd.hpp"
#include "fcswe/spectral.hpp"

namespace fcswe {

enum class Backend { Fc, Fd4, Fd6 };

Backend backend_from_name(const std::string& name);
const char* backend_name(Backend b);

/// Spatial differentiation backend bound to one 1D grid.
class Deriv1D {
 public:
  virtual ~Deriv1D() = default;
  virtual void differentiate(std::span<const double> f, std::span<double> df) = 0;
  /// Per-step solution smoothing; meaningful only for the spectral backend.
  virtual void filter_state(std::span<double> /*f*/) {}
};

/// Spatial differentiation backend bound to one 2D grid (slice-wise).
class Deriv2D {
 public:
  virtual ~Deriv2D() = default;
  virtual void d_x(const Field2D& f, Field2D& out) = 0;
  virtual void d_y(const Field2D& f, Field2D& out) = 0;
  virtual void filter_state(Field2D& /*f*/) {}
};

std::unique_ptr<Deriv1D> make_deriv_1d(Backend b, std::size_t n, double dx,
                                       const FCOperatorSet* ops, FilterSpec filter);
std::unique_ptr<Deriv2D> make_deriv_2d(Backend b, const Grid2D& grid,
                                       const FCOperatorSet* ops, FilterSpec filter_x,
                                       FilterSpec filter_y);

}  // namespace fcswe
