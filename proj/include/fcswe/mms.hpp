#pragma once

#include "fcswe/rhs.hpp"

namespace fcswe {

/// Manufactured solutions used by the convergence and dispersion studies.
/// Each namespace provides the exact fields, the seafloor motion, and the
/// forcing that makes the exact fields solve the forced system.

namespace mms1d {
constexpr double kDepth = 5.0;
double eta(double x, double t);
double u(double x, double t);
double xi(double x, double t);
double xi_x(double x, double t);
double xi_t(double x, double t);
double eta_t(double x, double t);
double u_t(double x, double t);
void forcing(double x, double t, double g, double& f_eta, double& f_u);
}  // namespace mms1d

namespace mms2d {
constexpr double kDepth = 5.0;
double eta(double x, double y, double t);
double u(double x, double y, double t);
double v(double x, double y, double t);
double xi(double x, double y, double t);
double xi_x(double x, double y, double t);
double xi_y(double x, double y, double t);
double xi_t(double x, double y, double t);
void forcing(double x, double y, double t, double g, double& f_eta, double& f_u,
             double& f_v);
}  // namespace mms2d

namespace mms_wave {
constexpr double kDepth = 5.0;
double eta(double x, double t);
double u(double x, double t);
void forcing(double x, double t, double g, double& f_eta, double& f_u);
}  // namespace mms_wave

}  // namespace fcswe
