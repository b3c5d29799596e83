#pragma once

#include <functional>
#include <optional>
#include <span>

#include "fcswe/deriv.hpp"
#include "fcswe/field.hpp"
#include "fcswe/source.hpp"

namespace fcswe {

/// h = h0 + eta - xi, pointwise. Throws a dry-state error (naming the first
/// violating index) when the column height is not positive.
void total_depth(std::span<const double> eta, std::span<const double> h0,
                 std::span<const double> xi, std::span<double> h);
void total_depth(const Field2D& eta, const Field2D& h0, const Field2D& xi, Field2D& h);

/// Optional manufactured forcing added to the rates.
using Forcing1D = std::function<void(double t, const Grid1D&, State1D& rates)>;
using Forcing2D = std::function<void(double t, const Grid2D&, State2D& rates)>;

/// Scratch buffers reused across right-hand-side evaluations.
struct RhsWorkspace1D {
  std::vector<double> eta_x, u_x, xi, xi_x, xi_t, h;
  void resize(std::size_t n);
};

struct RhsWorkspace2D {
  Field2D eta_x, eta_y, u_x, u_y, v_x, v_y, xi, xi_x, xi_y, xi_t, h;
  void resize(std::size_t nx, std::size_t ny);
};

/// Rates for the 1D system:
///   eta_t = xi_t - [(eta_x + h0_x - xi_x) u + h u_x]
///   u_t   = -(u u_x + g eta_x)
void rhs_1d(double t, const State1D& state, const Grid1D& grid, const Bathymetry1D& bathy,
            Source1D& source, Deriv1D& deriv, const PhysConstants& pc,
            const Forcing1D* forcing, State1D& rates, RhsWorkspace1D& ws);

/// Rates for the 2D system:
///   eta_t = xi_t - [h_x u + h u_x + h_y v + h v_y]
///   u_t   = -(u u_x + v u_y + g eta_x)
///   v_t   = -(u v_x + v v_y + g eta_y)
/// with h_x = h0_x + eta_x - xi_x (same along y).
void rhs_2d(double t, const State2D& state, const Grid2D& grid, const Bathymetry2D& bathy,
            Source2D& source, Deriv2D& deriv, const PhysConstants& pc,
            const Forcing2D* forcing, State2D& rates, RhsWorkspace2D& ws);

/// Displaced volume by the composite trapezoid rule.
double mass_audit(std::span<const double> eta, const Grid1D& grid);
double mass_audit(const Field2D& eta, const Grid2D& grid);

/// Percent change of displaced volume; undefined-baseline error when the
/// initial volume vanishes.
double mass_error_percent(double v_final, double v_initial);

}  // namespace fcswe
