#pragma once

#include <functional>
#include <variant>

#include "fcswe/field.hpp"
#include "fcswe/source.hpp"

namespace fcswe {

/// One boundary edge: rigid wall (u.n = 0, zero normal surface slope),
/// radiating outflow at the local wave speed, or prescribed values.
struct WallBc {};
struct RadiationBc {};

/// Prescribed values at (t, x [, y]); returns eta, u [, v].
struct DirichletBc1D {
  std::function<void(double t, double x, double& eta, double& u)> values;
};
struct DirichletBc2D {
  std::function<void(double t, double x, double y, double& eta, double& u, double& v)> values;
};

using EdgeBc1D = std::variant<WallBc, RadiationBc, DirichletBc1D>;
using EdgeBc2D = std::variant<WallBc, RadiationBc, DirichletBc2D>;

struct BoundarySpec1D {
  EdgeBc1D left = WallBc{};
  EdgeBc1D right = WallBc{};
  // Prescribed values are enforced on the outermost `dirichlet_band` nodes
  // (the matching-window width); single-field conditions stay at one node.
  unsigned dirichlet_band = 5;
};

struct BoundarySpec2D {
  EdgeBc2D x_min = WallBc{};
  EdgeBc2D x_max = WallBc{};
  EdgeBc2D y_min = WallBc{};
  EdgeBc2D y_max = WallBc{};
  unsigned dirichlet_band = 5;
};

/// Apply the boundary conditions in place at the endpoints, after a full
/// step (dt is the step just taken, needed by the radiation update).
void apply_bc_1d(double t, double dt, State1D& state, const BoundarySpec1D& spec,
                 const Grid1D& grid, const Bathymetry1D& bathy, Source1D& source,
                 const PhysConstants& pc);

/// Edge-wise application of the 1D rules along the outward normal; corner
/// values are the average of the two adjacent edge updates.
void apply_bc_2d(double t, double dt, State2D& state, const BoundarySpec2D& spec,
                 const Grid2D& grid, const Bathymetry2D& bathy, Source2D& source,
                 const PhysConstants& pc);

}  // namespace fcswe
