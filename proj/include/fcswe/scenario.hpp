#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fcswe/bc.hpp"
#include "fcswe/integrate.hpp"
#include "fcswe/metrics.hpp"
#include "fcswe/rhs.hpp"

namespace fcswe {

struct ExactSolution1D {
  std::function<double(double x, double t)> eta;
  std::function<double(double x, double t)> u;
};

struct ExactSolution2D {
  std::function<double(double x, double y, double t)> eta;
  std::function<double(double x, double y, double t)> u;
  std::function<double(double x, double y, double t)> v;
};

/// Complete description of one solver run. Sources are produced by a factory
/// because integrated sources carry per-run quadrature state.
struct Scenario1D {
  std::string id;
  Grid1D grid;
  PhysConstants constants;
  std::function<Bathymetry1D(const Grid1D&)> bathymetry;
  std::function<std::unique_ptr<Source1D>(const Grid1D&)> source;  // null => zero
  std::function<void(const Grid1D&, State1D&)> init;               // null => at rest
  BoundarySpec1D bc;
  double t_max = 1.0;
  double cfl = 0.0;          // 0 => backend default
  double cfl_safety = 1.0;
  double ref_depth = 0.0;    // 0 => max still depth
  std::optional<double> fixed_dt;
  Forcing1D forcing;                      // optional
  std::optional<ExactSolution1D> exact;   // error tracking + Dirichlet data
  std::vector<double> probe_x;
  bool filter_enabled = true;
  unsigned filter_p = 4;
  bool solution_filter = true;  // per-step smoothing of the state spectrum
  bool tolerate_blowup = false; // return partial results instead of throwing
  std::vector<double> snapshot_times;
  std::size_t snapshot_stride = 0;        // 0 => none
  double mass_audit_t = -1.0;             // <0 => no audit
  struct Event {
    double t;
    std::function<void(const Grid1D&, State1D&)> apply;
  };
  std::vector<Event> events;
};

struct Scenario2D {
  std::string id;
  Grid2D grid;
  PhysConstants constants;
  std::function<Bathymetry2D(const Grid2D&)> bathymetry;
  std::function<std::unique_ptr<Source2D>(const Grid2D&)> source;
  std::function<void(const Grid2D&, State2D&)> init;
  BoundarySpec2D bc;
  double t_max = 1.0;
  double cfl = 0.0;
  double cfl_safety = 1.0;
  double ref_depth = 0.0;
  std::optional<double> fixed_dt;
  Forcing2D forcing;
  std::optional<ExactSolution2D> exact;
  std::vector<std::pair<double, double>> probes;
  bool filter_enabled = true;
  unsigned filter_p = 4;
  bool solution_filter = true;
  bool tolerate_blowup = false;
  std::vector<double> snapshot_times;
  std::size_t snapshot_stride = 0;
  double mass_audit_t = -1.0;
  struct Event {
    double t;
    std::function<void(const Grid2D&, State2D&)> apply;
  };
  std::vector<Event> events;
};

struct ProbeSeries {
  double x = 0.0, y = 0.0;
  std::size_t index = 0;
  std::vector<double> t, eta, u, v;

  double max_eta() const;
  double argmax_eta_time() const;
};

struct RunResult1D {
  double dt = 0.0;
  std::size_t steps = 0;
  double wall_seconds = 0.0;
  State1D final_state;
  std::vector<ProbeSeries> probes;
  // Max-norm errors against the exact solution over all space and steps, with
  // the normalization scales max|exact|.
  double err_eta = 0.0, err_u = 0.0;
  double ref_eta = 0.0, ref_u = 0.0;
  std::vector<std::pair<double, State1D>> snapshots;
  double mass_v0 = 0.0, mass_v_audit = 0.0;
  bool audited = false;
  bool blew_up = false;
};

struct RunResult2D {
  double dt = 0.0;
  std::size_t steps = 0;
  double wall_seconds = 0.0;
  State2D final_state;
  std::vector<ProbeSeries> probes;
  double err_eta = 0.0, err_u = 0.0, err_v = 0.0;
  double ref_eta = 0.0, ref_u = 0.0, ref_v = 0.0;
  std::vector<std::pair<double, State2D>> snapshots;
  double mass_v0 = 0.0, mass_v_audit = 0.0;
  bool audited = false;
  bool blew_up = false;
};

/// Hook invoked after every accepted step (probing, custom diagnostics).
using StepHook1D = std::function<void(std::size_t step, double t, const State1D&)>;
using StepHook2D = std::function<void(std::size_t step, double t, const State2D&)>;

RunResult1D run_scenario_1d(const Scenario1D& sc, Backend backend, const FCOperatorSet* ops,
                            const StepHook1D& hook = nullptr);
RunResult2D run_scenario_2d(const Scenario2D& sc, Backend backend, const FCOperatorSet* ops,
                            const StepHook2D& hook = nullptr);

/// Timestep the scenario will use for a given backend.
double scenario_dt_1d(const Scenario1D& sc, Backend backend);
double scenario_dt_2d(const Scenario2D& sc, Backend backend);

}  // namespace fcswe
