#include "fcswe/integrate.hpp"

#include <cmath>
#include <string>

#include "fcswe/errors.hpp"

namespace fcswe {

double cfl_timestep(double min_spacing, const CflSpec& spec, double safety) {
  if (!(min_spacing > 0.0) || !(spec.ref_speed > 0.0) || !(spec.cfl > 0.0))
    fail(ErrorKind::InvalidConfig, "cfl_timestep: inputs must be positive");
  return safety * spec.cfl * min_spacing / spec.ref_speed;
}

double default_cfl(Backend b, int dim) {
  if (dim == 1) {
    switch (b) {
      case Backend::Fc: return 0.17;
      case Backend::Fd4: return 0.21;
      case Backend::Fd6: return 0.18;
    }
  } else {
    switch (b) {
      case Backend::Fc: return 0.10;
      case Backend::Fd4: return 0.17;
      case Backend::Fd6: return 0.14;
    }
  }
  fail(ErrorKind::Internal, "default_cfl: unreachable");
}

void StateOps<State1D>::add_scaled(State1D& dst, const State1D& base, double a,
                                   const State1D& k) {
  const std::size_t n = base.n();
  dst.eta.resize(n);
  dst.u.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    dst.eta[i] = base.eta[i] + a * k.eta[i];
    dst.u[i] = base.u[i] + a * k.u[i];
  }
}

void StateOps<State1D>::axpy(State1D& dst, double a, const State1D& k) {
  for (std::size_t i = 0; i < dst.n(); ++i) {
    dst.eta[i] += a * k.eta[i];
    dst.u[i] += a * k.u[i];
  }
}

double StateOps<State1D>::max_abs(const State1D& s) {
  double m = 0.0;
  for (double v : s.eta) m = std::max(m, std::abs(v));
  for (double v : s.u) m = std::max(m, std::abs(v));
  return m;
}

void StateOps<State2D>::add_scaled(State2D& dst, const State2D& base, double a,
                                   const State2D& k) {
  if (dst.nx() != base.nx() || dst.ny() != base.ny()) dst = State2D(base.nx(), base.ny());
  const std::size_t n = base.eta.size();
  for (std::size_t i = 0; i < n; ++i) {
    dst.eta.raw()[i] = base.eta.raw()[i] + a * k.eta.raw()[i];
    dst.u.raw()[i] = base.u.raw()[i] + a * k.u.raw()[i];
    dst.v.raw()[i] = base.v.raw()[i] + a * k.v.raw()[i];
  }
}

void StateOps<State2D>::axpy(State2D& dst, double a, const State2D& k) {
  const std::size_t n = dst.eta.size();
  for (std::size_t i = 0; i < n; ++i) {
    dst.eta.raw()[i] += a * k.eta.raw()[i];
    dst.u.raw()[i] += a * k.u.raw()[i];
    dst.v.raw()[i] += a * k.v.raw()[i];
  }
}

double StateOps<State2D>::max_abs(const State2D& s) {
  double m = 0.0;
  for (double v : s.eta.raw()) m = std::max(m, std::abs(v));
  for (double v : s.u.raw()) m = std::max(m, std::abs(v));
  for (double v : s.v.raw()) m = std::max(m, std::abs(v));
  return m;
}

template <class S>
void rk4_step(double t, double dt, S& state, const RhsFn<S>& rhs, const BcFn<S>& bc) {
  using Ops = StateOps<S>;
  S k1 = Ops::like(state), k2 = Ops::like(state), k3 = Ops::like(state),
    k4 = Ops::like(state), stage = Ops::like(state);

  rhs(t, state, k1);
  Ops::add_scaled(stage, state, 0.5 * dt, k1);
  rhs(t + 0.5 * dt, stage, k2);
  Ops::add_scaled(stage, state, 0.5 * dt, k2);
  rhs(t + 0.5 * dt, stage, k3);
  Ops::add_scaled(stage, state, dt, k3);
  rhs(t + dt, stage, k4);

  Ops::axpy(state, dt / 6.0, k1);
  Ops::axpy(state, dt / 3.0, k2);
  Ops::axpy(state, dt / 3.0, k3);
  Ops::axpy(state, dt / 6.0, k4);
  if (bc) bc(t + dt, dt, state);
}

namespace {

template <class S>
void check_finite(const S& state, std::size_t step, double t, double cap) {
  const double m = StateOps<S>::max_abs(state);
  if (!std::isfinite(m) || m > cap)
    fail(ErrorKind::BlowUp, "solution blow-up at step " + std::to_string(step) +
                                " (t = " + std::to_string(t) +
                                ", max |U| = " + std::to_string(m) + ")");
}

}  // namespace

template <class S>
void integrate(S& state, const IntegrateOptions& opt, const RhsFn<S>& rhs,
               const BcFn<S>& bc, const CommitFn& commit, const ObserveFn<S>& observe) {
  using Ops = StateOps<S>;
  if (opt.n_steps == 0) return;
  const double dt = opt.dt;
  if (!(dt > 0.0)) fail(ErrorKind::InvalidConfig, "integrate: dt must be positive");

  auto t_of = [&](std::size_t n) { return opt.t0 + dt * static_cast<double>(n); };
  if (observe) observe(0, opt.t0, state);

  if (opt.rk4_only) {
    for (std::size_t n = 0; n < opt.n_steps; ++n) {
      rk4_step(t_of(n), dt, state, rhs, bc);
      if (commit) commit(t_of(n + 1));
      check_finite(state, n + 1, t_of(n + 1), opt.blowup_abs);
      if (observe) observe(n + 1, t_of(n + 1), state);
    }
    return;
  }

  if (opt.n_steps < 4)
    fail(ErrorKind::InvalidConfig, "integrate: the AB4 loop needs at least 4 steps");

  // Startup: three RK4 steps while recording the right-hand sides of the
  // first three states for the Adams-Bashforth history.
  S hist[3] = {Ops::like(state), Ops::like(state), Ops::like(state)};
  for (std::size_t n = 0; n < 3; ++n) {
    rhs(t_of(n), state, hist[n]);
    if (opt.zero_state_startup) {
      if (bc) bc(t_of(n + 1), dt, state);
    } else {
      rk4_step(t_of(n), dt, state, rhs, bc);
    }
    if (commit) commit(t_of(n + 1));
    check_finite(state, n + 1, t_of(n + 1), opt.blowup_abs);
    if (observe) observe(n + 1, t_of(n + 1), state);
  }

  S rn = Ops::like(state);
  // hist slots cycle: at step n they hold the rhs of steps n-3, n-2, n-1.
  std::size_t h0 = 0, h1 = 1, h2 = 2;
  for (std::size_t n = 3; n < opt.n_steps; ++n) {
    rhs(t_of(n), state, rn);
    Ops::axpy(state, dt * 55.0 / 24.0, rn);
    Ops::axpy(state, dt * -59.0 / 24.0, hist[h2]);
    Ops::axpy(state, dt * 37.0 / 24.0, hist[h1]);
    Ops::axpy(state, dt * -9.0 / 24.0, hist[h0]);
    if (bc) bc(t_of(n + 1), dt, state);
    if (commit) commit(t_of(n + 1));
    check_finite(state, n + 1, t_of(n + 1), opt.blowup_abs);
    if (observe) observe(n + 1, t_of(n + 1), state);

    std::swap(hist[h0], rn);
    const std::size_t old0 = h0;
    h0 = h1;
    h1 = h2;
    h2 = old0;
  }
}

template void rk4_step<State1D>(double, double, State1D&, const RhsFn<State1D>&,
                                const BcFn<State1D>&);
template void rk4_step<State2D>(double, double, State2D&, const RhsFn<State2D>&,
                                const BcFn<State2D>&);
template void integrate<State1D>(State1D&, const IntegrateOptions&, const RhsFn<State1D>&,
                                 const BcFn<State1D>&, const CommitFn&,
                                 const ObserveFn<State1D>&);
template void integrate<State2D>(State2D&, const IntegrateOptions&, const RhsFn<State2D>&,
                                 const BcFn<State2D>&, const CommitFn&,
                                 const ObserveFn<State2D>&);

}  // namespace fcswe
