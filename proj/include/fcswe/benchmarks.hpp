#pragma once

#include "fcswe/lintheory.hpp"
#include "fcswe/scenario.hpp"

namespace fcswe {

// ---- scenario builders -----------------------------------------------------

/// Manufactured-solution runs (g = 1, prescribed boundary values, forcing).
Scenario1D mms1d_scenario(double dx);
Scenario2D mms2d_scenario(double dx);

/// Propagating-sine study over n wavelengths at ppw points per wavelength.
Scenario1D dispersion_scenario(unsigned n_waves, unsigned ppw);

/// Perturbed lake at rest over a cosine hump (nondimensional).
Scenario1D lake_perturbation_scenario(double eps, double dx);

/// Solitary wave over a sloping beach (radiating ends, mass audit).
Scenario1D solitary_beach_scenario(std::size_t nx);

/// Steady vortex over a Gaussian seafloor bump (prescribed edges).
Scenario2D steady_vortex_scenario(std::size_t nx);

/// N-wave propagation (radiating edges).
Scenario2D nwave_scenario(std::size_t nx = 201);
NWaveParams nwave_params();

/// Moving piston with rise-time ratio tau = t_r / t_c (walls).
Scenario1D piston_scenario(double tau, std::size_t nx);
PistonParams piston_params(double tau);

// ---- study drivers ----------------------------------------------------------

/// Convergence ladder for the manufactured solutions; errors are percent
/// relative max-norm over all space and steps.
ErrorReport mms_suite(int dim, const std::vector<double>& dx_list, Backend backend,
                      const FCOperatorSet* ops);

struct DispersionResult {
  double eta_error_percent = 0.0;
  double u_error_percent = 0.0;
  double wall_seconds = 0.0;
  bool blew_up = false;
};
DispersionResult dispersion_case(unsigned n_waves, unsigned ppw, Backend backend,
                                 const FCOperatorSet* ops);

struct LakeResult {
  std::vector<double> xs;
  std::vector<double> eta;       // snapshot at the evaluation time
  double pulse_amplitude = 0.0;  // max |eta| over the domain
  double oscillation = 0.0;      // max |eta| away from fronts, hump, reflections
  std::vector<Window> excluded;
};
LakeResult benchmark_lake_perturbation(double eps, double dx, Backend backend,
                                       const FCOperatorSet* ops);

struct BeachResult {
  RunResult1D run;
  double audit_time = 0.0;
  double mass_error_pct = 0.0;
};
BeachResult benchmark_solitary_beach(std::size_t nx, Backend backend, const FCOperatorSet* ops);

struct VortexResult {
  ErrorReport report;  // absolute max-norm errors per refinement
};
VortexResult benchmark_steady_vortex(const std::vector<std::size_t>& n_totals, Backend backend,
                                     const FCOperatorSet* ops);

struct NWaveResult {
  std::vector<double> ys;
  std::vector<double> eval_times;
  std::vector<std::vector<double>> solver_slices;  // per time, eta on x=0
  std::vector<std::vector<double>> linear_slices;
  std::vector<double> error_percent;  // per time, normalized by max |linear|
  double wall_seconds = 0.0;
};
NWaveResult benchmark_nwave(std::size_t nx, Backend backend, const FCOperatorSet* ops);

struct PistonResult {
  RunResult1D run;
  double t_c = 0.0;   // characteristic time x1 / sqrt(g h)
  double front_oscillation = 0.0;  // grid-scale residual near the wave front
};
PistonResult benchmark_piston(double tau, std::size_t nx, Backend backend,
                              const FCOperatorSet* ops);

}  // namespace fcswe
