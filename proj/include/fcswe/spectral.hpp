#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "fcswe/fc_precompute.hpp"
#include "fcswe/field.hpp"
#include "fcswe/grid.hpp"

namespace fcswe {

/// Exponential spectral filter sigma(n) = exp(-alpha (n/M)^(2p)) applied to
/// derivative coefficients. alpha is stored as a positive damping magnitude.
struct FilterSpec {
  double alpha = 0.0;
  unsigned p = 4;         // derivative-multiplier exponent
  unsigned smooth_p = 4;  // roll-off exponent for the per-step solution smoothing
  bool enabled = false;

  static FilterSpec disabled() { return {}; }

  /// Damping tuned to the timestep actually used: alpha = 16 c dt |log 1e-2| / dx.
  static FilterSpec from_timestep(double wave_speed, double dt, double dx, unsigned p = 4) {
    FilterSpec f;
    f.alpha = 16.0 * wave_speed * dt * 4.605170185988091 / dx;
    f.p = p;
    f.enabled = true;
    return f;
  }

  double sigma(double mode_ratio) const;
  double sigma_smooth(double mode_ratio) const;
};

/// Append the C-point periodic continuation to f: first N values are f, the
/// last C are ext_from_left*f[0..L) + ext_from_right*f[N-R..N).
void fc_extend(std::span<const double> f, const FCOperatorSet& ops, std::span<double> out);
std::vector<double> fc_extend(std::span<const double> f, const FCOperatorSet& ops);

/// FFT-based derivative of the continued sequence, restricted to the first N
/// points. Holds FFTW plans and scratch for one transform length; an instance
/// is not safe for concurrent calls, but distinct instances are independent.
class FcDerivative1D {
 public:
  FcDerivative1D(std::size_t n, double dx, const FCOperatorSet& ops, FilterSpec filter);
  ~FcDerivative1D();
  FcDerivative1D(const FcDerivative1D&) = delete;
  FcDerivative1D& operator=(const FcDerivative1D&) = delete;

  void differentiate(std::span<const double> f, std::span<double> df);

  /// Damp the high modes of the field itself (continuation, scaling of the
  /// spectrum by sigma, restriction); applied once per accepted step to keep
  /// aliased energy from nonlinear products bounded.
  void smooth(std::span<double> f);

  std::size_t n() const { return n_; }
  double dx() const { return dx_; }
  const FilterSpec& filter() const { return filter_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::size_t n_;
  double dx_;
  FilterSpec filter_;
  const FCOperatorSet* ops_ = nullptr;
  std::vector<double> ext_;
};

/// One-shot helper for tests and setup-time differentiation.
std::vector<double> fc_derivative_1d(std::span<const double> f, double dx,
                                     const FCOperatorSet& ops, FilterSpec filter);

/// Slice-wise 2D differentiation: every 1D line along the requested axis is
/// continued and differentiated independently.
class FcDerivative2D {
 public:
  FcDerivative2D(const Grid2D& grid, const FCOperatorSet& ops, FilterSpec filter_x,
                 FilterSpec filter_y);

  void d_x(const Field2D& f, Field2D& out);
  void d_y(const Field2D& f, Field2D& out);
  void smooth(Field2D& f);  // slice-wise along x, then along y

 private:
  FcDerivative1D kx_;
  FcDerivative1D ky_;
  std::vector<double> slice_in_;
  std::vector<double> slice_out_;
};

Field2D fc_derivative_2d(const Field2D& f, Axis axis, const Grid2D& grid,
                         const FCOperatorSet& ops, FilterSpec filter);

/// Apply the spectral derivative multiplier to an already-periodic sequence
/// (no continuation). Used by tests to check the kernel in isolation.
std::vector<double> periodic_spectral_derivative(std::span<const double> f, double period,
                                                 FilterSpec filter);

}  // namespace fcswe
