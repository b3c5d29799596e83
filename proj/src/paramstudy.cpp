#include "fcswe/paramstudy.hpp"

#include <cmath>

namespace fcswe {

namespace {

double radial_amp(const EqkParams& p, double amp, unsigned n, double dist) {
  const double s = dist / p.decay_len;
  return n * amp / std::sqrt(s * s + p.reg_eps * p.reg_eps);
}

// d/ddist of the 1/sqrt((dist/L)^2 + eps^2) factor.
double radial_amp_ddist(const EqkParams& p, double amp, unsigned n, double dist) {
  const double s = dist / p.decay_len;
  const double q = s * s + p.reg_eps * p.reg_eps;
  return -n * amp * s / (p.decay_len * q * std::sqrt(q));
}

}  // namespace

double eqk_rate_1d(const EqkParams& p, unsigned n, double x, double t) {
  const double c = p.c_eqk(n);
  const double s2 = 2.0 * p.sigma_1d * p.sigma_1d;
  const double gl = std::exp(-(x - c * t) * (x - c * t) / s2);
  const double gr = std::exp(-(x + c * t) * (x + c * t) / s2);
  return radial_amp(p, p.amp_1d, n, x) * (gl + gr);
}

double eqk_rate_1d_dx(const EqkParams& p, unsigned n, double x, double t) {
  const double c = p.c_eqk(n);
  const double s2 = p.sigma_1d * p.sigma_1d;
  const double gl = std::exp(-(x - c * t) * (x - c * t) / (2.0 * s2));
  const double gr = std::exp(-(x + c * t) * (x + c * t) / (2.0 * s2));
  const double a = radial_amp(p, p.amp_1d, n, x);
  const double da = radial_amp_ddist(p, p.amp_1d, n, x);
  return da * (gl + gr) +
         a * (-(x - c * t) / s2 * gl - (x + c * t) / s2 * gr);
}

double eqk_rate_2d(const EqkParams& p, unsigned n, double x, double y, double t) {
  const double r = std::sqrt(x * x + y * y);
  const double c = p.c_eqk(n);
  const double s2 = 2.0 * p.sigma_2d * p.sigma_2d;
  return radial_amp(p, p.amp_2d, n, r) * std::exp(-(r - c * t) * (r - c * t) / s2);
}

namespace {

double eqk_rate_2d_dr(const EqkParams& p, unsigned n, double r, double t) {
  const double c = p.c_eqk(n);
  const double s2 = p.sigma_2d * p.sigma_2d;
  const double g = std::exp(-(r - c * t) * (r - c * t) / (2.0 * s2));
  return radial_amp_ddist(p, p.amp_2d, n, r) * g +
         radial_amp(p, p.amp_2d, n, r) * (-(r - c * t) / s2) * g;
}

}  // namespace

double eqk_rate_2d_dx(const EqkParams& p, unsigned n, double x, double y, double t) {
  const double r = std::sqrt(x * x + y * y);
  if (r < 1e-9) return 0.0;
  return eqk_rate_2d_dr(p, n, r, t) * x / r;
}

double eqk_rate_2d_dy(const EqkParams& p, unsigned n, double x, double y, double t) {
  const double r = std::sqrt(x * x + y * y);
  if (r < 1e-9) return 0.0;
  return eqk_rate_2d_dr(p, n, r, t) * y / r;
}

double eqk_static_displacement_1d(const EqkParams& p, double x) {
  // The two counter-propagating pulses integrate to a full Gaussian passage:
  // integral over all time is sigma sqrt(2 pi) / c, and the speed multiple
  // cancels against the amplitude scaling.
  const double c = std::sqrt(p.g * p.depth);
  return radial_amp(p, p.amp_1d, 1, x) * p.sigma_1d * std::sqrt(2.0 * M_PI) / c;
}

double eqk_static_displacement_2d(const EqkParams& p, double x, double y) {
  const double r = std::sqrt(x * x + y * y);
  const double c = std::sqrt(p.g * p.depth);
  const double phi = 0.5 * (1.0 + std::erf(r / (p.sigma_2d * std::sqrt(2.0))));
  return radial_amp(p, p.amp_2d, 1, r) * p.sigma_2d * std::sqrt(2.0 * M_PI) * phi / c;
}

std::unique_ptr<Source1D> eqk_source_1d(const EqkParams& p, unsigned n, const Grid1D& grid) {
  // Once both pulses have fully left the domain the velocity is negligible;
  // skipping the exponentials keeps long runs cheap.
  const double t_cut = (p.half_domain + 8.0 * p.sigma_1d) / p.c_eqk(n);
  RateSource1DFns fns;
  fns.xi_t = [p, n, t_cut](double x, double t) {
    if (t > t_cut) return 0.0;
    return eqk_rate_1d(p, n, x, t);
  };
  fns.xi_tx = [p, n, t_cut](double x, double t) {
    if (t > t_cut) return 0.0;
    return eqk_rate_1d_dx(p, n, x, t);
  };
  return make_integrated_source_1d(std::move(fns), grid);
}

std::unique_ptr<Source2D> eqk_source_2d(const EqkParams& p, unsigned n, const Grid2D& grid) {
  const double r_max = p.half_domain * std::sqrt(2.0);
  const double t_cut = (r_max + 8.0 * p.sigma_2d) / p.c_eqk(n);
  RateSource2DFns fns;
  fns.xi_t = [p, n, t_cut](double x, double y, double t) {
    if (t > t_cut) return 0.0;
    return eqk_rate_2d(p, n, x, y, t);
  };
  fns.xi_tx = [p, n, t_cut](double x, double y, double t) {
    if (t > t_cut) return 0.0;
    return eqk_rate_2d_dx(p, n, x, y, t);
  };
  fns.xi_ty = [p, n, t_cut](double x, double y, double t) {
    if (t > t_cut) return 0.0;
    return eqk_rate_2d_dy(p, n, x, y, t);
  };
  return make_integrated_source_2d(std::move(fns), grid);
}

namespace {

// Hyperbolic-tangent beach: still depth H0 - s(x) with the topography rising
// to S on the shoreward (left) side of x1 over a 1/a length scale.
void tanh_beach(double x, double& h0, double& h0x) {
  const double H0 = 4000.0, S = 3990.0, x1 = -85000.0, a = 2e-4;
  const double th = std::tanh(a * (x - x1));
  const double s = 0.5 * S * (1.0 - th);
  const double sech = 1.0 / std::cosh(a * (x - x1));
  h0 = H0 - s;
  h0x = 0.5 * S * a * sech * sech;
}

}  // namespace

Scenario1D eqk_scenario_1d(const EqkParams& p, unsigned n, SourceVariant variant) {
  Scenario1D sc;
  sc.id = "eqk1d";
  sc.grid = Grid1D(-p.half_domain, p.half_domain, 300);
  sc.constants.g = p.g;
  sc.bathymetry = [](const Grid1D& g) {
    Bathymetry1D b;
    b.h0.resize(g.n);
    b.h0_x.resize(g.n);
    for (std::size_t i = 0; i < g.n; ++i) tanh_beach(g.x(i), b.h0[i], b.h0_x[i]);
    return b;
  };
  sc.bc.left = RadiationBc{};
  sc.bc.right = RadiationBc{};
  sc.t_max = 1000.0;
  sc.ref_depth = p.depth;
  sc.probe_x = {-95000.0};

  switch (variant) {
    case SourceVariant::Dynamic:
      sc.source = [p, n](const Grid1D& g) { return eqk_source_1d(p, n, g); };
      break;
    case SourceVariant::StaticAtT0:
      sc.init = [p](const Grid1D& g, State1D& s) {
        for (std::size_t i = 0; i < g.n; ++i)
          s.eta[i] = eqk_static_displacement_1d(p, g.x(i));
      };
      break;
    case SourceVariant::StaticAtTeqk: {
      Scenario1D::Event ev;
      ev.t = p.t_eqk_1d(n);
      ev.apply = [p](const Grid1D& g, State1D& s) {
        for (std::size_t i = 0; i < g.n; ++i)
          s.eta[i] += eqk_static_displacement_1d(p, g.x(i));
      };
      sc.events.push_back(ev);
      break;
    }
    case SourceVariant::Zero:
      break;
  }
  return sc;
}

Scenario2D eqk_scenario_2d(const EqkParams& p, unsigned n, SourceVariant variant) {
  Scenario2D sc;
  sc.id = "eqk2d";
  sc.grid = Grid2D(-p.half_domain, p.half_domain, 300, -p.half_domain, p.half_domain, 300);
  sc.constants.g = p.g;
  sc.bathymetry = [](const Grid2D& g) {
    Bathymetry2D b;
    b.h0 = Field2D(g.nx(), g.ny());
    b.h0_x = Field2D(g.nx(), g.ny());
    b.h0_y = Field2D(g.nx(), g.ny(), 0.0);
    for (std::size_t i = 0; i < g.nx(); ++i) {
      double h0, h0x;
      tanh_beach(g.x(i), h0, h0x);
      for (std::size_t j = 0; j < g.ny(); ++j) {
        b.h0(i, j) = h0;
        b.h0_x(i, j) = h0x;
      }
    }
    return b;
  };
  sc.bc.x_min = RadiationBc{};
  sc.bc.x_max = RadiationBc{};
  sc.bc.y_min = RadiationBc{};
  sc.bc.y_max = RadiationBc{};
  sc.t_max = 1000.0;
  sc.ref_depth = p.depth;
  sc.probes = {{-95000.0, 0.0}, {-95000.0, 20000.0}, {-95000.0, 40000.0}};

  switch (variant) {
    case SourceVariant::Dynamic:
      sc.source = [p, n](const Grid2D& g) { return eqk_source_2d(p, n, g); };
      break;
    case SourceVariant::StaticAtT0:
      sc.init = [p](const Grid2D& g, State2D& s) {
        for (std::size_t i = 0; i < g.nx(); ++i)
          for (std::size_t j = 0; j < g.ny(); ++j)
            s.eta(i, j) = eqk_static_displacement_2d(p, g.x(i), g.y(j));
      };
      break;
    case SourceVariant::StaticAtTeqk: {
      Scenario2D::Event ev;
      ev.t = p.t_eqk_2d(n);
      ev.apply = [p](const Grid2D& g, State2D& s) {
        for (std::size_t i = 0; i < g.nx(); ++i)
          for (std::size_t j = 0; j < g.ny(); ++j)
            s.eta(i, j) += eqk_static_displacement_2d(p, g.x(i), g.y(j));
      };
      sc.events.push_back(ev);
      break;
    }
    case SourceVariant::Zero:
      break;
  }
  return sc;
}

const StudyCell* StudyTables::find(unsigned n, SourceVariant v) const {
  for (const auto& c : cells)
    if (c.n == n && c.variant == v) return &c;
  return nullptr;
}

double StudyTables::static_deficit_percent(unsigned n) const {
  const StudyCell* dyn = find(n, SourceVariant::Dynamic);
  const StudyCell* st = find(n, SourceVariant::StaticAtT0);
  if (!dyn || !st) fail(ErrorKind::InvalidConfig, "study: missing dynamic/static cell");
  return (st->amplitude / dyn->amplitude - 1.0) * 100.0;
}

const char* variant_name(SourceVariant v) {
  switch (v) {
    case SourceVariant::Zero: return "zero";
    case SourceVariant::Dynamic: return "dynamic";
    case SourceVariant::StaticAtT0: return "static_t0";
    case SourceVariant::StaticAtTeqk: return "static_teqk";
  }
  return "?";
}

ParamStudyResult run_param_study(int dim, const std::vector<unsigned>& n_list,
                                 const std::vector<SourceVariant>& variants, Backend backend,
                                 const FCOperatorSet* ops, const EqkParams& p) {
  ParamStudyResult out;
  out.tables.dim = dim;

  for (SourceVariant v : variants) {
    // The t0-static run does not depend on the speed multiple; run it once.
    const bool n_independent = (v == SourceVariant::StaticAtT0);
    for (std::size_t idx = 0; idx < n_list.size(); ++idx) {
      const unsigned n = n_list[idx];
      StudyCell cell;
      cell.n = n;
      cell.variant = v;
      if (n_independent && idx > 0) {
        cell.amplitude = out.tables.find(n_list[0], v)->amplitude;
        cell.arrival = out.tables.find(n_list[0], v)->arrival;
        out.tables.cells.push_back(cell);
        continue;
      }
      if (dim == 1) {
        Scenario1D sc = eqk_scenario_1d(p, n, v);
        RunResult1D r = run_scenario_1d(sc, backend, ops);
        cell.amplitude = r.probes[0].max_eta();
        cell.arrival = r.probes[0].argmax_eta_time();
        cell.wall_seconds = r.wall_seconds;
      } else {
        Scenario2D sc = eqk_scenario_2d(p, n, v);
        RunResult2D r = run_scenario_2d(sc, backend, ops);
        cell.amplitude = r.probes[0].max_eta();
        cell.arrival = r.probes[0].argmax_eta_time();
        cell.wall_seconds = r.wall_seconds;
        if (v == SourceVariant::Dynamic) {
          for (std::size_t s = 0; s < r.probes.size(); ++s)
            out.stations.push_back({r.probes[s].y / 1000.0, r.probes[s]});
        }
      }
      out.tables.cells.push_back(cell);
    }
  }
  return out;
}

}  // namespace fcswe
