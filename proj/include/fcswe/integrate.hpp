#pragma once

#include <cstddef>
#include <functional>

#include "fcswe/deriv.hpp"
#include "fcswe/field.hpp"

namespace fcswe {

/// CFL timestep rule: dt = safety * cfl * min_spacing / ref_speed, with the
/// reference speed sqrt(g H) for a representative still depth H.
struct CflSpec {
  double cfl = 0.17;
  double ref_speed = 1.0;
};

double cfl_timestep(double min_spacing, const CflSpec& spec, double safety = 1.0);

/// Empirically largest stable CFL constants per backend and dimension.
double default_cfl(Backend b, int dim);

template <class S>
struct StateOps;

template <>
struct StateOps<State1D> {
  static State1D like(const State1D& s) { return State1D(s.n()); }
  static void add_scaled(State1D& dst, const State1D& base, double a, const State1D& k);
  static void axpy(State1D& dst, double a, const State1D& k);
  static double max_abs(const State1D& s);
};

template <>
struct StateOps<State2D> {
  static State2D like(const State2D& s) { return State2D(s.nx(), s.ny()); }
  static void add_scaled(State2D& dst, const State2D& base, double a, const State2D& k);
  static void axpy(State2D& dst, double a, const State2D& k);
  static double max_abs(const State2D& s);
};

template <class S>
using RhsFn = std::function<void(double t, const S& state, S& rates)>;
template <class S>
using BcFn = std::function<void(double t, double dt, S& state)>;
using CommitFn = std::function<void(double t)>;
template <class S>
using ObserveFn = std::function<void(std::size_t step, double t, const S& state)>;

/// One classical four-stage step; the boundary condition is applied to the
/// full update only, not to intermediate stages.
template <class S>
void rk4_step(double t, double dt, S& state, const RhsFn<S>& rhs, const BcFn<S>& bc);

struct IntegrateOptions {
  double t0 = 0.0;
  double dt = 0.0;
  std::size_t n_steps = 0;
  bool rk4_only = false;           // integrate every step with RK4
  bool zero_state_startup = false; // hold the state for the first three steps
  double blowup_abs = 1e10;
};

/// Main loop: three RK4 startup steps, then fourth-order Adams-Bashforth over
/// the stored right-hand-side history. Observers see the state after each
/// step (and once at t0). Throws a blow-up error with the offending step when
/// the state leaves the finite range.
template <class S>
void integrate(S& state, const IntegrateOptions& opt, const RhsFn<S>& rhs,
               const BcFn<S>& bc, const CommitFn& commit, const ObserveFn<S>& observe);

extern template void rk4_step<State1D>(double, double, State1D&, const RhsFn<State1D>&,
                                       const BcFn<State1D>&);
extern template void rk4_step<State2D>(double, double, State2D&, const RhsFn<State2D>&,
                                       const BcFn<State2D>&);
extern template void integrate<State1D>(State1D&, const IntegrateOptions&,
                                        const RhsFn<State1D>&, const BcFn<State1D>&,
                                        const CommitFn&, const ObserveFn<State1D>&);
extern template void integrate<State2D>(State2D&, const IntegrateOptions&,
                                        const RhsFn<State2D>&, const BcFn<State2D>&,
                                        const CommitFn&, const ObserveFn<State2D>&);

}  // namespace fcswe
