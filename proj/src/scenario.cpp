#include "fcswe/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace fcswe {

double ProbeSeries::max_eta() const {
  double m = -1e300;
  for (double v : eta) m = std::max(m, v);
  return m;
}

double ProbeSeries::argmax_eta_time() const {
  if (eta.empty()) return 0.0;
  std::size_t best = 0;
  for (std::size_t i = 1; i < eta.size(); ++i)
    if (eta[i] > eta[best]) best = i;
  return t[best];
}

namespace {

double pick_ref_speed(double g, double ref_depth, double max_h0) {
  const double depth = ref_depth > 0.0 ? ref_depth : max_h0;
  return std::sqrt(g * depth);
}

struct StepPlan {
  double dt = 0.0;
  std::size_t n_steps = 0;
};

StepPlan plan_steps(double t_max, double dt_raw) {
  StepPlan p;
  p.n_steps = static_cast<std::size_t>(std::ceil(t_max / dt_raw - 1e-12));
  p.n_steps = std::max<std::size_t>(p.n_steps, 4);
  p.dt = t_max / static_cast<double>(p.n_steps);
  return p;
}

/// Instantaneous state changes split the run into segments; each segment
/// restarts the integrator so the multistep history never spans a jump.
template <class Event>
std::vector<std::pair<std::size_t, const Event*>> plan_events(const std::vector<Event>& evs,
                                                              const StepPlan& plan) {
  std::vector<std::pair<std::size_t, const Event*>> out;
  for (const auto& ev : evs) {
    auto step = static_cast<std::size_t>(std::llround(ev.t / plan.dt));
    out.emplace_back(std::min(step, plan.n_steps), &ev);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace

double scenario_dt_1d(const Scenario1D& sc, Backend backend) {
  if (sc.fixed_dt) return *sc.fixed_dt;
  Bathymetry1D bathy = sc.bathymetry(sc.grid);
  double max_h0 = 0.0;
  for (double h : bathy.h0) max_h0 = std::max(max_h0, h);
  const double c = pick_ref_speed(sc.constants.g, sc.ref_depth, max_h0);
  const double cfl = sc.cfl > 0.0 ? sc.cfl : default_cfl(backend, 1);
  return cfl_timestep(sc.grid.dx(), {cfl, c}, sc.cfl_safety);
}

double scenario_dt_2d(const Scenario2D& sc, Backend backend) {
  if (sc.fixed_dt) return *sc.fixed_dt;
  Bathymetry2D bathy = sc.bathymetry(sc.grid);
  double max_h0 = 0.0;
  for (double h : bathy.h0.raw()) max_h0 = std::max(max_h0, h);
  const double c = pick_ref_speed(sc.constants.g, sc.ref_depth, max_h0);
  const double cfl = sc.cfl > 0.0 ? sc.cfl : default_cfl(backend, 2);
  return cfl_timestep(std::min(sc.grid.dx(), sc.grid.dy()), {cfl, c}, sc.cfl_safety);
}

RunResult1D run_scenario_1d(const Scenario1D& sc, Backend backend, const FCOperatorSet* ops,
                            const StepHook1D& hook) {
  const Grid1D& grid = sc.grid;
  const std::size_t n = grid.n;
  Bathymetry1D bathy = sc.bathymetry(grid);

  StepPlan plan = plan_steps(sc.t_max, scenario_dt_1d(sc, backend));

  double max_h0 = 0.0;
  for (double h : bathy.h0) max_h0 = std::max(max_h0, h);
  const double c_ref = pick_ref_speed(sc.constants.g, sc.ref_depth, max_h0);
  FilterSpec filter = sc.filter_enabled && backend == Backend::Fc
                          ? FilterSpec::from_timestep(c_ref, plan.dt, grid.dx(), sc.filter_p)
                          : FilterSpec::disabled();
  auto deriv = make_deriv_1d(backend, n, grid.dx(), ops, filter);

  std::unique_ptr<Source1D> source = sc.source ? sc.source(grid) : make_zero_source_1d();

  State1D state(n);
  if (sc.init) sc.init(grid, state);

  RunResult1D out;
  out.dt = plan.dt;
  out.steps = plan.n_steps;
  for (double px : sc.probe_x) {
    ProbeSeries ps;
    ps.index = grid.nearest(px);
    ps.x = grid.x(ps.index);
    out.probes.push_back(ps);
  }

  auto events = plan_events(sc.events, plan);
  std::vector<char> snap_taken(sc.snapshot_times.size(), 0);

  RhsWorkspace1D ws;
  RhsFn<State1D> rhs = [&](double t, const State1D& s, State1D& rates) {
    rhs_1d(t, s, grid, bathy, *source, *deriv, sc.constants,
           sc.forcing ? &sc.forcing : nullptr, rates, ws);
  };
  BcFn<State1D> bc = [&](double t, double dt, State1D& s) {
    // The solution spectrum is damped once per accepted step, then the
    // boundary values are re-imposed on the smoothed field.
    if (sc.solution_filter) {
      deriv->filter_state(s.eta);
      deriv->filter_state(s.u);
    }
    apply_bc_1d(t, dt, s, sc.bc, grid, bathy, *source, sc.constants);
  };
  CommitFn commit = [&](double t) { source->commit(t); };

  out.mass_v0 = mass_audit(state.eta, grid);
  const std::size_t audit_step =
      sc.mass_audit_t >= 0.0
          ? std::min(plan.n_steps,
                     static_cast<std::size_t>(std::llround(sc.mass_audit_t / plan.dt)))
          : std::numeric_limits<std::size_t>::max();

  auto record = [&](std::size_t step, double t, const State1D& s) {
    for (auto& ps : out.probes) {
      ps.t.push_back(t);
      ps.eta.push_back(s.eta[ps.index]);
      ps.u.push_back(s.u[ps.index]);
    }
    if (sc.exact) {
      for (std::size_t i = 0; i < n; ++i) {
        const double ee = sc.exact->eta(grid.x(i), t);
        const double ue = sc.exact->u(grid.x(i), t);
        out.err_eta = std::max(out.err_eta, std::abs(s.eta[i] - ee));
        out.err_u = std::max(out.err_u, std::abs(s.u[i] - ue));
        out.ref_eta = std::max(out.ref_eta, std::abs(ee));
        out.ref_u = std::max(out.ref_u, std::abs(ue));
      }
    }
    for (std::size_t k = 0; k < sc.snapshot_times.size(); ++k) {
      if (!snap_taken[k] && t + 0.5 * plan.dt >= sc.snapshot_times[k]) {
        out.snapshots.emplace_back(t, s);
        snap_taken[k] = 1;
      }
    }
    if (sc.snapshot_stride > 0 && step % sc.snapshot_stride == 0)
      out.snapshots.emplace_back(t, s);
    if (step == audit_step) {
      out.mass_v_audit = mass_audit(s.eta, grid);
      out.audited = true;
    }
    if (hook) hook(step, t, s);
  };

  const auto t_start = std::chrono::steady_clock::now();
  std::size_t done = 0;
  std::size_t ev_idx = 0;
  record(0, 0.0, state);
  while (done < plan.n_steps) {
    while (ev_idx < events.size() && events[ev_idx].first <= done) {
      events[ev_idx].second->apply(grid, state);
      ++ev_idx;
    }
    std::size_t next_stop = plan.n_steps;
    if (ev_idx < events.size()) next_stop = std::min(next_stop, events[ev_idx].first);
    const std::size_t seg_steps = next_stop - done;

    IntegrateOptions opt;
    opt.t0 = plan.dt * static_cast<double>(done);
    opt.dt = plan.dt;
    opt.n_steps = seg_steps;
    opt.rk4_only = seg_steps < 4;
    const std::size_t base = done;
    ObserveFn<State1D> observe = [&](std::size_t step, double t, const State1D& s) {
      if (step == 0) return;  // segment start already recorded
      record(base + step, t, s);
    };
    integrate(state, opt, rhs, bc, commit, observe);
    done = next_stop;
  }
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  out.final_state = std::move(state);
  return out;
}

RunResult2D run_scenario_2d(const Scenario2D& sc, Backend backend, const FCOperatorSet* ops,
                            const StepHook2D& hook) {
  const Grid2D& grid = sc.grid;
  const std::size_t nx = grid.nx(), ny = grid.ny();
  Bathymetry2D bathy = sc.bathymetry(grid);

  StepPlan plan = plan_steps(sc.t_max, scenario_dt_2d(sc, backend));

  double max_h0 = 0.0;
  for (double h : bathy.h0.raw()) max_h0 = std::max(max_h0, h);
  const double c_ref = pick_ref_speed(sc.constants.g, sc.ref_depth, max_h0);
  FilterSpec fx = sc.filter_enabled && backend == Backend::Fc
                      ? FilterSpec::from_timestep(c_ref, plan.dt, grid.dx(), sc.filter_p)
                      : FilterSpec::disabled();
  FilterSpec fy = sc.filter_enabled && backend == Backend::Fc
                      ? FilterSpec::from_timestep(c_ref, plan.dt, grid.dy(), sc.filter_p)
                      : FilterSpec::disabled();
  auto deriv = make_deriv_2d(backend, grid, ops, fx, fy);

  std::unique_ptr<Source2D> source = sc.source ? sc.source(grid) : make_zero_source_2d();

  State2D state(nx, ny);
  if (sc.init) sc.init(grid, state);

  RunResult2D out;
  out.dt = plan.dt;
  out.steps = plan.n_steps;
  for (auto [px, py] : sc.probes) {
    ProbeSeries ps;
    const std::size_t ix = grid.gx.nearest(px);
    const std::size_t iy = grid.gy.nearest(py);
    ps.x = grid.x(ix);
    ps.y = grid.y(iy);
    ps.index = ix * ny + iy;
    out.probes.push_back(ps);
  }

  auto events = plan_events(sc.events, plan);
  std::vector<char> snap_taken(sc.snapshot_times.size(), 0);

  RhsWorkspace2D ws;
  RhsFn<State2D> rhs = [&](double t, const State2D& s, State2D& rates) {
    rhs_2d(t, s, grid, bathy, *source, *deriv, sc.constants,
           sc.forcing ? &sc.forcing : nullptr, rates, ws);
  };
  BcFn<State2D> bc = [&](double t, double dt, State2D& s) {
    if (sc.solution_filter) {
      deriv->filter_state(s.eta);
      deriv->filter_state(s.u);
      deriv->filter_state(s.v);
    }
    apply_bc_2d(t, dt, s, sc.bc, grid, bathy, *source, sc.constants);
  };
  CommitFn commit = [&](double t) { source->commit(t); };

  out.mass_v0 = mass_audit(state.eta, grid);
  const std::size_t audit_step =
      sc.mass_audit_t >= 0.0
          ? std::min(plan.n_steps,
                     static_cast<std::size_t>(std::llround(sc.mass_audit_t / plan.dt)))
          : std::numeric_limits<std::size_t>::max();

  auto record = [&](std::size_t step, double t, const State2D& s) {
    for (auto& ps : out.probes) {
      ps.t.push_back(t);
      ps.eta.push_back(s.eta.raw()[ps.index]);
      ps.u.push_back(s.u.raw()[ps.index]);
      ps.v.push_back(s.v.raw()[ps.index]);
    }
    if (sc.exact) {
      for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j) {
          const double x = grid.x(i), y = grid.y(j);
          const double ee = sc.exact->eta(x, y, t);
          const double ue = sc.exact->u(x, y, t);
          const double ve = sc.exact->v(x, y, t);
          out.err_eta = std::max(out.err_eta, std::abs(s.eta(i, j) - ee));
          out.err_u = std::max(out.err_u, std::abs(s.u(i, j) - ue));
          out.err_v = std::max(out.err_v, std::abs(s.v(i, j) - ve));
          out.ref_eta = std::max(out.ref_eta, std::abs(ee));
          out.ref_u = std::max(out.ref_u, std::abs(ue));
          out.ref_v = std::max(out.ref_v, std::abs(ve));
        }
    }
    for (std::size_t k = 0; k < sc.snapshot_times.size(); ++k) {
      if (!snap_taken[k] && t + 0.5 * plan.dt >= sc.snapshot_times[k]) {
        out.snapshots.emplace_back(t, s);
        snap_taken[k] = 1;
      }
    }
    if (sc.snapshot_stride > 0 && step % sc.snapshot_stride == 0)
      out.snapshots.emplace_back(t, s);
    if (step == audit_step) {
      out.mass_v_audit = mass_audit(s.eta, grid);
      out.audited = true;
    }
    if (hook) hook(step, t, s);
  };

  const auto t_start = std::chrono::steady_clock::now();
  std::size_t done = 0;
  std::size_t ev_idx = 0;
  record(0, 0.0, state);
  while (done < plan.n_steps) {
    while (ev_idx < events.size() && events[ev_idx].first <= done) {
      events[ev_idx].second->apply(grid, state);
      ++ev_idx;
    }
    std::size_t next_stop = plan.n_steps;
    if (ev_idx < events.size()) next_stop = std::min(next_stop, events[ev_idx].first);
    const std::size_t seg_steps = next_stop - done;

    IntegrateOptions opt;
    opt.t0 = plan.dt * static_cast<double>(done);
    opt.dt = plan.dt;
    opt.n_steps = seg_steps;
    opt.rk4_only = seg_steps < 4;
    const std::size_t base = done;
    ObserveFn<State2D> observe = [&](std::size_t step, double t, const State2D& s) {
      if (step == 0) return;
      record(base + step, t, s);
    };
    integrate(state, opt, rhs, bc, commit, observe);
    done = next_stop;
  }
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  out.final_state = std::move(state);
  return out;
}

}  // namespace fcswe
