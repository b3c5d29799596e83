#include "fcswe/mms.hpp"

#include <cmath>

namespace fcswe {

namespace mms1d {

double eta(double x, double t) { return std::sin(5 * x - 3 * t) * std::sin(23 * x - 5 * t); }
double u(double x, double t) {
  return std::cos(2.5 * x - t) * std::cos(17 * x - 4 * t);
}
double xi(double x, double t) { return std::sin(53 * x - 13 * t) * std::sin(3 * x - 15 * t); }

double xi_x(double x, double t) {
  const double a = 53 * x - 13 * t, b = 3 * x - 15 * t;
  return 53 * std::cos(a) * std::sin(b) + 3 * std::sin(a) * std::cos(b);
}
double xi_t(double x, double t) {
  const double a = 53 * x - 13 * t, b = 3 * x - 15 * t;
  return -13 * std::cos(a) * std::sin(b) - 15 * std::sin(a) * std::cos(b);
}
double eta_t(double x, double t) {
  const double a = 5 * x - 3 * t, b = 23 * x - 5 * t;
  return -3 * std::cos(a) * std::sin(b) - 5 * std::sin(a) * std::cos(b);
}
double u_t(double x, double t) {
  const double a = 2.5 * x - t, b = 17 * x - 4 * t;
  return std::sin(a) * std::cos(b) + 4 * std::cos(a) * std::sin(b);
}

void forcing(double x, double t, double g, double& f_eta, double& f_u) {
  const double x0 = 3 * t - 5 * x;
  const double x1 = std::sin(x0);
  const double x2 = 5 * t;
  const double x3 = -23 * x + x2;
  const double x4 = std::sin(x3);
  const double x5 = 13 * t - 53 * x;
  const double x6 = -3 * x + 3 * x2;
  const double x7 = std::sin(x6);
  const double x8 = std::sin(x5);
  const double x9 = x1 * x4 - x7 * x8 + 5;
  const double x10 = t - 2.5 * x;
  const double x11 = 4 * t - 17 * x;
  const double x12 = std::cos(x11);
  const double x13 = x12 * std::sin(x10);
  const double x14 = std::cos(x10);
  const double x15 = x14 * std::sin(x11);
  const double x16 = 9 * std::sin(2 * (t - 9 * x)) - 14 * std::sin(4 * (2 * t - 7 * x));
  const double x17 = x12 * x14;
  f_eta = 5 * x1 * std::cos(x3) + 2.5 * x13 * x9 + 17 * x15 * x9 +
          x17 * (x16 + 28 * std::sin(28 * (t - 2 * x)) + 25 * std::sin(2 * (t + 25 * x))) +
          3 * x4 * std::cos(x0) - 13 * x7 * std::cos(x5) - 15 * x8 * std::cos(x6);
  f_u = g * x16 - x13 - 4 * x15 + 0.5 * x17 * (5 * x13 + 34 * x15);
}

}  // namespace mms1d

namespace mms2d {

double eta(double x, double y, double t) {
  return std::sin(7 * x + 3 * y - 2 * t) * std::sin(2 * x + 11 * y - 1.2 * t);
}
double u(double x, double y, double t) {
  return std::cos(1.5 * x + 5.5 * y - t) * std::cos(9 * x + 0.5 * y - 1.1 * t);
}
double v(double x, double y, double t) {
  return std::sin(5 * x + 2.3 * y - 3 * t) * std::cos(3 * x + 7.5 * y - 1.3 * t);
}
double xi(double x, double y, double t) {
  return std::sin(3 * x + 19 * y - 13 * t) * std::sin(27 * x + 5 * y - 15 * t);
}
double xi_x(double x, double y, double t) {
  const double a = 3 * x + 19 * y - 13 * t, b = 27 * x + 5 * y - 15 * t;
  return 3 * std::cos(a) * std::sin(b) + 27 * std::sin(a) * std::cos(b);
}
double xi_y(double x, double y, double t) {
  const double a = 3 * x + 19 * y - 13 * t, b = 27 * x + 5 * y - 15 * t;
  return 19 * std::cos(a) * std::sin(b) + 5 * std::sin(a) * std::cos(b);
}
double xi_t(double x, double y, double t) {
  const double a = 3 * x + 19 * y - 13 * t, b = 27 * x + 5 * y - 15 * t;
  return -13 * std::cos(a) * std::sin(b) - 15 * std::sin(a) * std::cos(b);
}

void forcing(double x, double y, double t, double g, double& f_eta, double& f_u,
             double& f_v) {
  const double x0 = -15 * t + 27 * x + 5 * y;
  const double x1 = std::sin(x0);
  const double x2 = 3 * x;
  const double x3 = -13 * t + x2 + 19 * y;
  const double x4 = std::cos(x3);
  const double x5 = std::sin(x3);
  const double x6 = std::cos(x0);
  const double x7 = -2 * t + 7 * x + 3 * y;
  const double x8 = std::sin(x7);
  const double x9 = -1.2 * t + 2 * x + 11 * y;
  const double x10 = x8 * std::cos(x9);
  const double x11 = std::sin(x9);
  const double x12 = x11 * std::cos(x7);
  const double x13 = -x1 * x5 + x11 * x8 + 5;
  const double x14 = -3 * t + 5 * x + 2.3 * y;
  const double x15 = std::sin(x14);
  const double x16 = -1.3 * t + x2 + 7.5 * y;
  const double x17 = std::sin(x16);
  const double x18 = x15 * x17;
  const double x19 = -1.1 * t + 9 * x + 0.5 * y;
  const double x20 = -t + 1.5 * x + 5.5 * y;
  const double x21 = std::cos(x20);
  const double x22 = x21 * std::sin(x19);
  const double x23 = std::cos(x19);
  const double x24 = x23 * std::sin(x20);
  const double x25 = std::cos(x14);
  const double x26 = std::cos(x16);
  const double x27 = x1 * x4;
  const double x28 = x5 * x6;
  const double x29 = 2 * x10;
  const double x30 = 7 * x12;
  const double x31 = x21 * x23;
  const double x32 = 11 * x10;
  const double x33 = 3 * x12;
  const double x34 = x15 * x26;
  const double x35 = x25 * x26;
  f_eta = 13 * x1 * x4 - 1.2 * x10 - 2 * x12 - 7.5 * x13 * x18 - 9 * x13 * x22 -
          1.5 * x13 * x24 + 2.3 * x13 * x25 * x26 - x31 * (3 * x27 + 27 * x28 - x29 - x30) -
          x34 * (19 * x27 + 5 * x28 - x32 - x33) + 15 * x5 * x6;
  f_u = g * (x29 + x30) + 1.1 * x22 + x24 - 1.5 * x31 * (6 * x22 + x24) -
        0.5 * x34 * (x22 + 11 * x24);
  f_v = g * (x32 + x33) + 1.3 * x15 * x17 - x31 * (3 * x18 - 5 * x35) -
        0.1 * x34 * (75 * x18 - 23 * x35) - 3 * x35;
}

}  // namespace mms2d

namespace mms_wave {

double eta(double x, double t) { return std::sin(2 * M_PI * (x - t)); }
double u(double x, double t) { return std::cos(2 * M_PI * (x - t)); }

void forcing(double x, double t, double g, double& f_eta, double& f_u) {
  const double x0 = M_PI * (2 * t - 2 * x);
  const double x1 = std::cos(x0);
  const double x2 = std::sin(x0);
  const double x3 = 2 * M_PI;
  f_eta = -x3 * (-x1 * x1 + x1 + x2 * (x2 - 5));
  f_u = x3 * (g * x1 - x2 + 0.5 * std::sin(M_PI * (4 * t - 4 * x)));
}

}  // namespace mms_wave

}  // namespace fcswe
