#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fcswe {

/// Linearized-theory reference for the N-wave benchmark. The free surface is
/// recovered by inverting the closed-form transform of the initial condition
/// on a periodic super-domain with trapezoid summation in wavenumber space.
struct NWaveParams {
  double eps = 0.004;
  double height = 0.001;   // H
  double length = 30.0;    // L
  double y1 = 0.0;
  double y2 = 2.3;
  double x0 = -15.0;
  double gamma = 0.1061;
  double g = 1.0;
  double h0 = 1.0;
};

double nwave_initial(const NWaveParams& p, double x, double y);

/// Transform of the initial condition (analytic closed form).
std::complex<double> nwave_initial_hat(const NWaveParams& p, double k, double l);

class NWaveLinearSolution {
 public:
  /// super_factor: periodic super-domain size as a multiple of the physical
  /// half-width; k_cut: sum truncated where the transform envelope falls
  /// below cut_rel of its peak.
  NWaveLinearSolution(const NWaveParams& p, double half_width = 100.0,
                      double super_factor = 4.0, double cut_rel = 1e-10);

  double eta(double x, double y, double t) const;

  /// Evaluate along the x = x_slice line for a vector of y values.
  std::vector<double> slice_x(double x_slice, const std::vector<double>& ys, double t) const;

 private:
  NWaveParams p_;
  double dk_ = 0.0;
  int j_max_ = 0;
};

/// Linear wave theory for the moving-piston benchmark: damped oscillatory
/// integral over wavenumber, integrated by adaptive panel quadrature with the
/// panel density tied to the integrand's phase speed.
struct PistonParams {
  double xi_m = 80.0;   // final piston height (m)
  double half_len = 2440.0;  // piston half-length b (m)
  double depth = 200.0;      // h (m)
  double g = 9.81;
  double t_r = 5.5;          // rise time (s)
};

double piston_linear_eta(const PistonParams& p, double x, double t);

}  // namespace fcswe
