#include "fcswe/rhs.hpp"

#include <cmath>
#include <string>

namespace fcswe {

void total_depth(std::span<const double> eta, std::span<const double> h0,
                 std::span<const double> xi, std::span<double> h) {
  for (std::size_t i = 0; i < eta.size(); ++i) {
    h[i] = h0[i] + eta[i] - xi[i];
    if (!(h[i] > 0.0))
      fail(ErrorKind::DryState,
           "total depth not positive at index " + std::to_string(i) +
               " (h = " + std::to_string(h[i]) + ")");
  }
}

void total_depth(const Field2D& eta, const Field2D& h0, const Field2D& xi, Field2D& h) {
  for (std::size_t k = 0; k < eta.size(); ++k) {
    h.raw()[k] = h0.raw()[k] + eta.raw()[k] - xi.raw()[k];
    if (!(h.raw()[k] > 0.0)) {
      const std::size_t ix = k / eta.ny(), iy = k % eta.ny();
      fail(ErrorKind::DryState, "total depth not positive at index (" + std::to_string(ix) +
                                    ", " + std::to_string(iy) + ")");
    }
  }
}

void RhsWorkspace1D::resize(std::size_t n) {
  for (auto* v : {&eta_x, &u_x, &xi, &xi_x, &xi_t, &h}) v->resize(n);
}

void RhsWorkspace2D::resize(std::size_t nx, std::size_t ny) {
  for (auto* f : {&eta_x, &eta_y, &u_x, &u_y, &v_x, &v_y, &xi, &xi_x, &xi_y, &xi_t, &h})
    if (f->nx() != nx || f->ny() != ny) *f = Field2D(nx, ny);
}

void rhs_1d(double t, const State1D& state, const Grid1D& grid, const Bathymetry1D& bathy,
            Source1D& source, Deriv1D& deriv, const PhysConstants& pc,
            const Forcing1D* forcing, State1D& rates, RhsWorkspace1D& ws) {
  const std::size_t n = state.n();
  ws.resize(n);
  source.eval(t, grid, ws.xi, ws.xi_x, ws.xi_t);
  deriv.differentiate(state.eta, ws.eta_x);
  deriv.differentiate(state.u, ws.u_x);
  total_depth(state.eta, bathy.h0, ws.xi, ws.h);

  const double g = pc.g;
  for (std::size_t i = 0; i < n; ++i) {
    const double hx = ws.eta_x[i] + bathy.h0_x[i] - ws.xi_x[i];
    rates.eta[i] = ws.xi_t[i] - (hx * state.u[i] + ws.h[i] * ws.u_x[i]);
    rates.u[i] = -(state.u[i] * ws.u_x[i] + g * ws.eta_x[i]);
  }
  if (forcing) (*forcing)(t, grid, rates);
}

void rhs_2d(double t, const State2D& state, const Grid2D& grid, const Bathymetry2D& bathy,
            Source2D& source, Deriv2D& deriv, const PhysConstants& pc,
            const Forcing2D* forcing, State2D& rates, RhsWorkspace2D& ws) {
  const std::size_t nx = state.nx(), ny = state.ny();
  ws.resize(nx, ny);
  source.eval(t, grid, ws.xi, ws.xi_x, ws.xi_y, ws.xi_t);
  deriv.d_x(state.eta, ws.eta_x);
  deriv.d_y(state.eta, ws.eta_y);
  deriv.d_x(state.u, ws.u_x);
  deriv.d_y(state.u, ws.u_y);
  deriv.d_x(state.v, ws.v_x);
  deriv.d_y(state.v, ws.v_y);
  total_depth(state.eta, bathy.h0, ws.xi, ws.h);

  const double g = pc.g;
  for (std::size_t k = 0; k < state.eta.size(); ++k) {
    const double u = state.u.raw()[k];
    const double v = state.v.raw()[k];
    const double h = ws.h.raw()[k];
    const double hx = bathy.h0_x.raw()[k] + ws.eta_x.raw()[k] - ws.xi_x.raw()[k];
    const double hy = bathy.h0_y.raw()[k] + ws.eta_y.raw()[k] - ws.xi_y.raw()[k];
    rates.eta.raw()[k] =
        ws.xi_t.raw()[k] - (hx * u + h * ws.u_x.raw()[k] + hy * v + h * ws.v_y.raw()[k]);
    rates.u.raw()[k] =
        -(u * ws.u_x.raw()[k] + v * ws.u_y.raw()[k] + g * ws.eta_x.raw()[k]);
    rates.v.raw()[k] =
        -(u * ws.v_x.raw()[k] + v * ws.v_y.raw()[k] + g * ws.eta_y.raw()[k]);
  }
  if (forcing) (*forcing)(t, grid, rates);
}

double mass_audit(std::span<const double> eta, const Grid1D& grid) {
  double sum = 0.0;
  for (std::size_t i = 0; i < eta.size(); ++i) {
    const double w = (i == 0 || i + 1 == eta.size()) ? 0.5 : 1.0;
    sum += w * eta[i];
  }
  return sum * grid.dx();
}

double mass_audit(const Field2D& eta, const Grid2D& grid) {
  double sum = 0.0;
  const std::size_t nx = eta.nx(), ny = eta.ny();
  for (std::size_t i = 0; i < nx; ++i) {
    const double wx = (i == 0 || i + 1 == nx) ? 0.5 : 1.0;
    for (std::size_t j = 0; j < ny; ++j) {
      const double wy = (j == 0 || j + 1 == ny) ? 0.5 : 1.0;
      sum += wx * wy * eta(i, j);
    }
  }
  return sum * grid.dx() * grid.dy();
}

double mass_error_percent(double v_final, double v_initial) {
  if (v_initial == 0.0)
    fail(ErrorKind::UndefinedBaseline, "mass error undefined: initial volume is zero");
  return (v_final / v_initial - 1.0) * 100.0;
}

}  // namespace fcswe
