#include "fcswe/bc.hpp"

#include <array>
#include <cmath>
#include <optional>

namespace fcswe {

namespace {

// Zero one-sided slope with a five-point stencil: solve for the boundary
// value that makes the fourth-order one-sided first derivative vanish.
//   f0 = (48 f1 - 36 f2 + 16 f3 - 3 f4) / 25
template <class Get>
double neumann_endpoint(Get f) {
  return (48.0 * f(1) - 36.0 * f(2) + 16.0 * f(3) - 3.0 * f(4)) / 25.0;
}

// Degree-4 Lagrange interpolation through nodes at offsets 1..5 from the
// boundary (inward), evaluated at offset `s` (in units of the spacing).
// Used by the radiation update to pull the advected value from the interior.
template <class Get>
double advected_value(Get f, double s) {
  double acc = 0.0;
  for (int j = 1; j <= 5; ++j) {
    double w = 1.0;
    for (int k = 1; k <= 5; ++k) {
      if (k == j) continue;
      w *= (s - k) / static_cast<double>(j - k);
    }
    acc += w * f(j);
  }
  return acc;
}

struct EdgeValues {
  std::optional<double> eta, u, v;
};

}  // namespace

void apply_bc_1d(double t, double dt, State1D& state, const BoundarySpec1D& spec,
                 const Grid1D& grid, const Bathymetry1D& bathy, Source1D& source,
                 const PhysConstants& pc) {
  const std::size_t n = state.n();
  const double dx = grid.dx();

  // Local seafloor displacement at the two endpoints (for the radiation speed).
  double xi_l = 0.0, xi_r = 0.0;
  if (!source.is_zero()) {
    static thread_local std::vector<double> xi, xi_x, xi_t;
    xi.resize(n);
    xi_x.resize(n);
    xi_t.resize(n);
    source.eval(t, grid, xi, xi_x, xi_t);
    xi_l = xi.front();
    xi_r = xi.back();
  }

  auto apply_edge = [&](const EdgeBc1D& edge, bool left) {
    const std::size_t b = left ? 0 : n - 1;
    auto eta_at = [&](int j) { return state.eta[left ? j : n - 1 - j]; };
    auto u_at = [&](int j) { return state.u[left ? j : n - 1 - j]; };
    if (std::holds_alternative<WallBc>(edge)) {
      state.u[b] = 0.0;
      state.eta[b] = neumann_endpoint(eta_at);
    } else if (std::holds_alternative<RadiationBc>(edge)) {
      const double h = bathy.h0[b] + state.eta[b] - (left ? xi_l : xi_r);
      const double c = std::sqrt(std::max(pc.g * h, 0.0));
      const double s = c * dt / dx;  // outward foot offset, pulled from inside
      state.eta[b] = advected_value(eta_at, s);
      state.u[b] = advected_value(u_at, s);
    } else {
      const auto& d = std::get<DirichletBc1D>(edge);
      for (unsigned j = 0; j < spec.dirichlet_band && j < n; ++j) {
        const std::size_t idx = left ? j : n - 1 - j;
        d.values(t, grid.x(idx), state.eta[idx], state.u[idx]);
      }
    }
  };

  apply_edge(spec.left, true);
  apply_edge(spec.right, false);
}

namespace {

/// Candidate update a single edge rule prescribes for node (ix, iy), reading
/// the current state along the edge's inward normal.
EdgeValues edge_candidate(const EdgeBc2D& edge, const State2D& s, std::size_t ix,
                          std::size_t iy, int which /*0:x_min 1:x_max 2:y_min 3:y_max*/,
                          double t, double dt, const Grid2D& grid, const Bathymetry2D& bathy,
                          const Field2D* xi, const PhysConstants& pc) {
  const std::size_t nx = s.nx(), ny = s.ny();
  const bool along_x = which < 2;
  const bool at_min = (which == 0 || which == 2);
  const double spacing = along_x ? grid.dx() : grid.dy();

  auto sample = [&](const Field2D& f, int j) -> double {
    if (along_x) return f(at_min ? std::size_t(j) : nx - 1 - j, iy);
    return f(ix, at_min ? std::size_t(j) : ny - 1 - j);
  };

  EdgeValues out;
  if (std::holds_alternative<WallBc>(edge)) {
    out.eta = neumann_endpoint([&](int j) { return sample(s.eta, j); });
    if (along_x)
      out.u = 0.0;  // normal velocity vanishes; tangential slip retained
    else
      out.v = 0.0;
  } else if (std::holds_alternative<RadiationBc>(edge)) {
    const double h = bathy.h0(ix, iy) + s.eta(ix, iy) - (xi ? (*xi)(ix, iy) : 0.0);
    const double c = std::sqrt(std::max(pc.g * h, 0.0));
    const double off = c * dt / spacing;
    out.eta = advected_value([&](int j) { return sample(s.eta, j); }, off);
    out.u = advected_value([&](int j) { return sample(s.u, j); }, off);
    out.v = advected_value([&](int j) { return sample(s.v, j); }, off);
  } else {
    const auto& d = std::get<DirichletBc2D>(edge);
    double e = s.eta(ix, iy), u = s.u(ix, iy), v = s.v(ix, iy);
    d.values(t, grid.x(ix), grid.y(iy), e, u, v);
    out.eta = e;
    out.u = u;
    out.v = v;
  }
  return out;
}

void write_values(State2D& s, std::size_t ix, std::size_t iy, const EdgeValues& val) {
  if (val.eta) s.eta(ix, iy) = *val.eta;
  if (val.u) s.u(ix, iy) = *val.u;
  if (val.v) s.v(ix, iy) = *val.v;
}

void write_average(State2D& s, std::size_t ix, std::size_t iy, const EdgeValues& a,
                   const EdgeValues& b) {
  auto merge = [](std::optional<double> p, std::optional<double> q,
                  double cur) -> double {
    if (p && q) return 0.5 * (*p + *q);
    if (p) return *p;
    if (q) return *q;
    return cur;
  };
  s.eta(ix, iy) = merge(a.eta, b.eta, s.eta(ix, iy));
  s.u(ix, iy) = merge(a.u, b.u, s.u(ix, iy));
  s.v(ix, iy) = merge(a.v, b.v, s.v(ix, iy));
}

}  // namespace

void apply_bc_2d(double t, double dt, State2D& state, const BoundarySpec2D& spec,
                 const Grid2D& grid, const Bathymetry2D& bathy, Source2D& source,
                 const PhysConstants& pc) {
  const std::size_t nx = state.nx(), ny = state.ny();

  const Field2D* xi_ptr = nullptr;
  static thread_local Field2D xi, xi_x, xi_y, xi_t;
  if (!source.is_zero()) {
    if (xi.nx() != nx || xi.ny() != ny) {
      xi = Field2D(nx, ny);
      xi_x = Field2D(nx, ny);
      xi_y = Field2D(nx, ny);
      xi_t = Field2D(nx, ny);
    }
    source.eval(t, grid, xi, xi_x, xi_y, xi_t);
    xi_ptr = &xi;
  }

  // Prescribed-value edges write their whole band first (corners included).
  auto dirichlet_band = [&](const EdgeBc2D& edge, int which) {
    if (!std::holds_alternative<DirichletBc2D>(edge)) return;
    const auto& d = std::get<DirichletBc2D>(edge);
    const unsigned band = spec.dirichlet_band;
    for (unsigned layer = 0; layer < band; ++layer) {
      if (which < 2) {
        const std::size_t ix = (which == 0) ? layer : nx - 1 - layer;
        for (std::size_t iy = 0; iy < ny; ++iy)
          d.values(t, grid.x(ix), grid.y(iy), state.eta(ix, iy), state.u(ix, iy),
                   state.v(ix, iy));
      } else {
        const std::size_t iy = (which == 2) ? layer : ny - 1 - layer;
        for (std::size_t ix = 0; ix < nx; ++ix)
          d.values(t, grid.x(ix), grid.y(iy), state.eta(ix, iy), state.u(ix, iy),
                   state.v(ix, iy));
      }
    }
  };
  dirichlet_band(spec.x_min, 0);
  dirichlet_band(spec.x_max, 1);
  dirichlet_band(spec.y_min, 2);
  dirichlet_band(spec.y_max, 3);

  // Remaining edges next (corner nodes excluded), all candidates computed
  // from the pre-update snapshot so edge order cannot matter.
  const State2D snap = state;
  auto is_dirichlet = [](const EdgeBc2D& e) {
    return std::holds_alternative<DirichletBc2D>(e);
  };
  if (!is_dirichlet(spec.x_min) || !is_dirichlet(spec.x_max)) {
    for (std::size_t iy = 1; iy + 1 < ny; ++iy) {
      if (!is_dirichlet(spec.x_min))
        write_values(state, 0, iy,
                     edge_candidate(spec.x_min, snap, 0, iy, 0, t, dt, grid, bathy, xi_ptr, pc));
      if (!is_dirichlet(spec.x_max))
        write_values(
            state, nx - 1, iy,
            edge_candidate(spec.x_max, snap, nx - 1, iy, 1, t, dt, grid, bathy, xi_ptr, pc));
    }
  }
  if (!is_dirichlet(spec.y_min) || !is_dirichlet(spec.y_max)) {
    for (std::size_t ix = 1; ix + 1 < nx; ++ix) {
      if (!is_dirichlet(spec.y_min))
        write_values(state, ix, 0,
                     edge_candidate(spec.y_min, snap, ix, 0, 2, t, dt, grid, bathy, xi_ptr, pc));
      if (!is_dirichlet(spec.y_max))
        write_values(
            state, ix, ny - 1,
            edge_candidate(spec.y_max, snap, ix, ny - 1, 3, t, dt, grid, bathy, xi_ptr, pc));
    }
  }

  // Corners from the updated edges: average of the two adjacent edge rules.
  struct Corner {
    std::size_t ix, iy;
    const EdgeBc2D* ex;
    const EdgeBc2D* ey;
    int wx, wy;
  };
  const Corner corners[4] = {
      {0, 0, &spec.x_min, &spec.y_min, 0, 2},
      {nx - 1, 0, &spec.x_max, &spec.y_min, 1, 2},
      {0, ny - 1, &spec.x_min, &spec.y_max, 0, 3},
      {nx - 1, ny - 1, &spec.x_max, &spec.y_max, 1, 3},
  };
  for (const auto& c : corners) {
    if (is_dirichlet(*c.ex) && is_dirichlet(*c.ey)) continue;  // set by the bands
    EdgeValues a =
        edge_candidate(*c.ex, state, c.ix, c.iy, c.wx, t, dt, grid, bathy, xi_ptr, pc);
    EdgeValues b =
        edge_candidate(*c.ey, state, c.ix, c.iy, c.wy, t, dt, grid, bathy, xi_ptr, pc);
    write_average(state, c.ix, c.iy, a, b);
  }
}

}  // namespace fcswe
