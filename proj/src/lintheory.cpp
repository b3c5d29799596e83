#include "fcswe/lintheory.hpp"

#include <cmath>

#include "fcswe/errors.hpp"

namespace fcswe {

namespace {

// cosech with the removable small-argument form 1/x - x/6 + 7x^3/360.
double csch(double x) { return 1.0 / std::sinh(x); }

// (e^{-ikL} - 1) cosech(alpha k), finite at k -> 0.
std::complex<double> factor_k(double k, double alpha, double length) {
  const std::complex<double> i(0.0, 1.0);
  if (k == 0.0) return -i * length / alpha;
  if (std::abs(alpha * k) < 1e-5) {
    // (e^{-ikL}-1)/k expanded, times k cosech(alpha k) = 1/alpha - alpha k^2/6.
    const std::complex<double> num = -i * length - 0.5 * k * length * length +
                                     i * k * k * length * length * length / 6.0;
    return num * (1.0 / alpha - alpha * k * k / 6.0);
  }
  return (std::exp(-i * k * length) - 1.0) * csch(alpha * k);
}

// [(y1-y2) l + i (1 - alpha l coth(alpha l))] cosech(alpha l), finite at l -> 0.
std::complex<double> factor_l(double l, double alpha, double y1, double y2) {
  const std::complex<double> i(0.0, 1.0);
  if (l == 0.0) return std::complex<double>((y1 - y2) / alpha, 0.0);
  if (std::abs(alpha * l) < 1e-5) {
    const double al = alpha * l;
    // 1 - x coth x = -x^2/3 - x^4/45 + ...; cosech x = 1/x - x/6 + ...
    const double re = (y1 - y2) * l;
    const double im = -al * al / 3.0 - al * al * al * al / 45.0;
    return (re + i * im) * (1.0 / al - al / 6.0);
  }
  return ((y1 - y2) * l + i * (1.0 - alpha * l / std::tanh(alpha * l))) * csch(alpha * l);
}

}  // namespace

double nwave_initial(const NWaveParams& p, double x, double y) {
  const double s = 1.0 / std::cosh(p.gamma * (y - p.y1));
  return 0.5 * p.eps * p.height *
         (std::tanh(p.gamma * (x - p.x0)) - std::tanh(p.gamma * (x - p.x0 - p.length))) *
         (y - p.y2) * s * s;
}

std::complex<double> nwave_initial_hat(const NWaveParams& p, double k, double l) {
  const std::complex<double> i(0.0, 1.0);
  const double alpha = M_PI / (2.0 * p.gamma);
  const std::complex<double> phase = std::exp(-i * (k * p.x0 + l * p.y1));
  return i * (4.0 * p.eps * p.height / M_PI) * alpha * alpha * alpha *
         factor_k(k, alpha, p.length) * phase * factor_l(l, alpha, p.y1, p.y2);
}

NWaveLinearSolution::NWaveLinearSolution(const NWaveParams& p, double half_width,
                                         double super_factor, double cut_rel)
    : p_(p) {
  const double period = 2.0 * half_width * super_factor;
  dk_ = 2.0 * M_PI / period;
  // The transform decays like exp(-alpha |k|); truncate at the requested
  // relative envelope level.
  const double alpha = M_PI / (2.0 * p.gamma);
  const double k_cut = -std::log(cut_rel) / alpha;
  j_max_ = static_cast<int>(std::ceil(k_cut / dk_));
}

double NWaveLinearSolution::eta(double x, double y, double t) const {
  std::vector<double> ys = {y};
  return slice_x(x, ys, t)[0];
}

std::vector<double> NWaveLinearSolution::slice_x(double x_slice, const std::vector<double>& ys,
                                                 double t) const {
  const std::complex<double> i(0.0, 1.0);
  const double c = std::sqrt(p_.g * p_.h0);
  const int jm = j_max_;

  // Sum over k first at each l (the dispersion relation couples k and l), then
  // expand the remaining single sum over the requested y values.
  std::vector<std::complex<double>> gl(2 * jm + 1);
  for (int jl = -jm; jl <= jm; ++jl) {
    const double l = dk_ * jl;
    std::complex<double> acc(0.0, 0.0);
    for (int jk = -jm; jk <= jm; ++jk) {
      const double k = dk_ * jk;
      const double omega = c * std::sqrt(k * k + l * l);
      acc += nwave_initial_hat(p_, k, l) * std::exp(i * k * x_slice) * std::cos(omega * t);
    }
    gl[jl + jm] = acc;
  }

  std::vector<double> out(ys.size(), 0.0);
  const double scale = dk_ * dk_ / (4.0 * M_PI * M_PI);
  for (std::size_t m = 0; m < ys.size(); ++m) {
    std::complex<double> acc(0.0, 0.0);
    for (int jl = -jm; jl <= jm; ++jl) {
      const double l = dk_ * jl;
      acc += gl[jl + jm] * std::exp(i * l * ys[m]);
    }
    out[m] = acc.real() * scale;
  }
  return out;
}

double piston_linear_eta(const PistonParams& p, double x, double t) {
  if (t <= 0.0) return 0.0;
  const double kappa = M_PI / p.t_r;

  auto integrand = [&](double k) -> double {
    if (k <= 0.0) k = 1e-12;
    const double omega = std::sqrt(p.g * k * std::tanh(k * p.depth));
    const double w = std::cos(k * x) * std::sin(k * p.half_len) / (k * std::cosh(k * p.depth));
    const double d2 = kappa * kappa - omega * omega;
    double bracket;
    const bool after = t > p.t_r;
    if (std::abs(d2) < 1e-10 * kappa * kappa) {
      // removable resonance: l'Hopital in omega^2
      double lim = t * std::sin(kappa * t);
      if (after) lim += (t - p.t_r) * std::sin(kappa * (t - p.t_r));
      bracket = kappa * kappa * lim / (2.0 * kappa);
    } else {
      bracket = std::cos(omega * t) - std::cos(kappa * t);
      if (after) bracket += std::cos(omega * (t - p.t_r)) + std::cos(kappa * t);
      bracket *= kappa * kappa / d2;
    }
    return w * bracket;
  };

  // Envelope 1/(k cosh(kh)) falls below 1e-8 of its peak near k h = ln(2e8).
  const double k_max = std::log(2e8) / p.depth;
  // Panels sized by the fastest phase among k x, k b, omega t, kappa t.
  const double phase_span =
      k_max * (std::abs(x) + p.half_len) + std::sqrt(p.g * k_max) * t + kappa * t;
  int panels = std::max(256, static_cast<int>(phase_span * 2.0));
  const double h = k_max / panels;
  // Composite Simpson over the panels.
  double acc = 0.0;
  for (int j = 0; j < panels; ++j) {
    const double a = j * h;
    acc += h / 6.0 * (integrand(a) + 4.0 * integrand(a + 0.5 * h) + integrand(a + h));
  }
  return p.xi_m / M_PI * acc;
}

}  // namespace fcswe
