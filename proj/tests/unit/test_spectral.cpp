#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "fcswe/fc_precompute.hpp"
#include "fcswe/spectral.hpp"

using namespace fcswe;

namespace {

const std::string kTmp = FCSWE_TEST_TMPDIR;

const FCOperatorSet& ops5() {
  static FCOperatorSet ops = [] {
    PrecomputeConfig cfg;
    return ensure_operator_cache(cfg, kTmp + "/ops_L5R5C25.fcg");
  }();
  return ops;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

TEST_CASE("fc_extend: zero input gives zero extension") {
  std::vector<double> f(50, 0.0);
  auto ext = fc_extend(f, ops5());
  REQUIRE(ext.size() == 75);
  CHECK(max_abs(ext) == 0.0);
}

TEST_CASE("fc_extend: first N values reproduce the input exactly") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> f(40);
  for (auto& x : f) x = dist(rng);
  auto ext = fc_extend(f, ops5());
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(ext[i] == f[i]);
}

TEST_CASE("fc_extend: too few points rejected") {
  std::vector<double> f(9, 1.0);
  std::vector<double> out(9 + ops5().cont);
  CHECK_THROWS_AS(fc_extend(f, ops5(), out), SolverError);
}

TEST_CASE("fc_extend: constant wraps periodically with tiny jumps") {
  std::vector<double> f(50, 1.0);
  auto ext = fc_extend(f, ops5());
  const std::size_t total = ext.size();
  double max_jump = 0.0;
  for (std::size_t i = 0; i < total; ++i)
    max_jump = std::max(max_jump, std::abs(ext[(i + 1) % total] - ext[i]));
  CAPTURE(max_jump);
  CHECK(max_jump < 1e-6);
  // Wrap-around mismatch between the last extension value and f[0].
  CHECK(std::abs(ext[total - 1] - ext[0]) < 1e-6);
  // The extension of the constant stays near the constant.
  double dev = 0.0;
  for (std::size_t i = 50; i < total; ++i) dev = std::max(dev, std::abs(ext[i] - 1.0));
  CHECK(dev < 1e-6);
}

TEST_CASE("fc_extend: ramp transitions smoothly without blow-up") {
  const std::size_t n = 50;
  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = static_cast<double>(i) / (n - 1);
  auto ext = fc_extend(f, ops5());
  CHECK(max_abs(ext) < 3.0);  // fit envelope stays bounded by ~3 max|f|
}

TEST_CASE("periodic kernel: exact derivative of a band-limited sequence") {
  // A trig polynomial periodic on [0, P) sampled on its own grid must be
  // differentiated to rounding by the multiplier stage alone.
  const std::size_t n = 64;
  const double period = 2.0;
  std::vector<double> f(n), dref(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = period * static_cast<double>(i) / n;
    double w = 2.0 * std::numbers::pi / period;
    f[i] = 0.3 + std::sin(3 * w * x) + 0.5 * std::cos(7 * w * x);
    dref[i] = 3 * w * std::cos(3 * w * x) - 0.5 * 7 * w * std::sin(7 * w * x);
  }
  auto df = periodic_spectral_derivative(f, period, FilterSpec::disabled());
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(df[i] - dref[i]));
  CHECK(worst < 1e-11);
}

TEST_CASE("fc derivative: constant function has near-zero derivative") {
  // The constant is carried through the blend, so its derivative is limited
  // by the operator quality rather than exactly zero.
  std::vector<double> f(80, 4.2);
  auto df = fc_derivative_1d(f, 0.01, ops5(), FilterSpec::disabled());
  CHECK(max_abs(df) < 2e-11 * 4.2);
}

TEST_CASE("fc derivative: sin(5x) on [0,1] at N=200") {
  const std::size_t n = 200;
  const double dx = 1.0 / (n - 1);
  std::vector<double> f(n), dref(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = i * dx;
    f[i] = std::sin(5.0 * x);
    dref[i] = 5.0 * std::cos(5.0 * x);
  }
  auto df = fc_derivative_1d(f, dx, ops5(), FilterSpec::disabled());
  // The boundary node carries the derivative of the matching-window
  // interpolation error, f^(5) dx^4 / 5; away from it the error is spectral.
  // Interior taken at a fixed physical margin so the edge influence, which
  // decays like one over distance squared, shrinks with dx.
  double worst = 0.0, inner = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double e = std::abs(df[i] - dref[i]);
    double x = i * dx;
    worst = std::max(worst, e);
    if (x >= 0.1 && x <= 0.9) inner = std::max(inner, e);
  }
  CHECK(worst < 1e-6);
  CHECK(inner < 5e-9);
}

TEST_CASE("fc derivative: convergence order on exp(sin(3x))") {
  std::vector<double> full_errs, inner_errs;
  for (std::size_t n : {40, 80, 160}) {
    const double dx = 1.0 / (n - 1);
    std::vector<double> f(n), dref(n);
    for (std::size_t i = 0; i < n; ++i) {
      double x = i * dx;
      f[i] = std::exp(std::sin(3.0 * x));
      dref[i] = 3.0 * std::cos(3.0 * x) * f[i];
    }
    auto df = fc_derivative_1d(f, dx, ops5(), FilterSpec::disabled());
    double worst = 0.0, inner = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double e = std::abs(df[i] - dref[i]);
      double x = i * dx;
      worst = std::max(worst, e);
      if (x >= 0.1 && x <= 0.9) inner = std::max(inner, e);
    }
    full_errs.push_back(worst);
    inner_errs.push_back(inner);
  }
  // Edge nodes converge at fourth order, the interior at fifth or better.
  CHECK(std::log2(full_errs[0] / full_errs[1]) >= 3.7);
  CHECK(std::log2(full_errs[1] / full_errs[2]) >= 3.7);
  CHECK(std::log2(inner_errs[0] / inner_errs[1]) >= 4.8);
  CHECK(std::log2(inner_errs[1] / inner_errs[2]) >= 4.8);
}

TEST_CASE("fc derivative: linearity") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const std::size_t n = 60;
  const double dx = 0.02;
  std::vector<double> f(n), g(n), h(n);
  for (std::size_t i = 0; i < n; ++i) {
    f[i] = dist(rng);
    g[i] = dist(rng);
    h[i] = 2.5 * f[i] - 1.25 * g[i];
  }
  auto filter = FilterSpec::from_timestep(2.0, 1e-3, dx);
  auto df = fc_derivative_1d(f, dx, ops5(), filter);
  auto dg = fc_derivative_1d(g, dx, ops5(), filter);
  auto dh = fc_derivative_1d(h, dx, ops5(), filter);
  double scale = std::max(max_abs(df), max_abs(dg));
  for (std::size_t i = 0; i < n; ++i)
    CHECK(std::abs(dh[i] - (2.5 * df[i] - 1.25 * dg[i])) < 1e-12 * scale);
}

TEST_CASE("filter: endpoint values") {
  auto f = FilterSpec::from_timestep(2.236, 7.6e-4, 0.01);
  CHECK(f.sigma(0.0) == doctest::Approx(1.0));
  CHECK(f.sigma(1.0) == doctest::Approx(std::exp(-f.alpha)).epsilon(1e-12));
  // At the maximum stable timestep ratio of 0.17 the damping magnitude is
  // 16 * 0.17 * |log(1e-2)| = 12.5.
  auto g = FilterSpec::from_timestep(1.0, 0.17, 1.0);
  CHECK(g.alpha == doctest::Approx(12.525).epsilon(1e-3));
}

TEST_CASE("filter: never amplifies the spectrum") {
  const std::size_t n = 128;
  const double period = 1.0;
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> f(n);
  for (auto& x : f) x = dist(rng);
  auto unfiltered = periodic_spectral_derivative(f, period, FilterSpec::disabled());
  auto filtered = periodic_spectral_derivative(f, period, FilterSpec::from_timestep(1.0, 0.1, 1.0));
  double l2_f = 0.0, l2_u = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    l2_f += filtered[i] * filtered[i];
    l2_u += unfiltered[i] * unfiltered[i];
  }
  CHECK(l2_f <= l2_u * (1.0 + 1e-14));
}

TEST_CASE("fc derivative 2d: constant along slices is flat") {
  Grid2D grid(0.0, 1.0, 40, 0.0, 1.0, 30);
  Field2D f(40, 30);
  for (std::size_t i = 0; i < 40; ++i)
    for (std::size_t j = 0; j < 30; ++j) f(i, j) = std::sin(2.0 * grid.x(i));
  Field2D dy = fc_derivative_2d(f, Axis::Y, grid, ops5(), FilterSpec::disabled());
  double worst = 0.0;
  for (double v : dy.raw()) worst = std::max(worst, std::abs(v));
  CHECK(worst < 2e-10);
}

TEST_CASE("fc derivative 2d: sin(7x+3y) along x at 200x200") {
  const std::size_t n = 200;
  Grid2D grid(0.0, 1.0, n, 0.0, 1.0, n);
  Field2D f(n, n), dref(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      f(i, j) = std::sin(7.0 * grid.x(i) + 3.0 * grid.y(j));
      dref(i, j) = 7.0 * std::cos(7.0 * grid.x(i) + 3.0 * grid.y(j));
    }
  Field2D dx = fc_derivative_2d(f, Axis::X, grid, ops5(), FilterSpec::disabled());
  double worst = 0.0, inner = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double e = std::abs(dx(i, j) - dref(i, j));
      worst = std::max(worst, e);
      if (grid.x(i) >= 0.1 && grid.x(i) <= 0.9) inner = std::max(inner, e);
    }
  CHECK(worst < 3e-6);
  CHECK(inner < 2e-8);
}

TEST_CASE("fc derivative 2d: axis symmetry under transposition") {
  const std::size_t nx = 48, ny = 36;
  Grid2D grid(0.0, 1.0, nx, 0.0, 0.75, ny);
  Grid2D gridT(0.0, 0.75, ny, 0.0, 1.0, nx);
  Field2D f(nx, ny), ft(ny, nx);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) {
      f(i, j) = std::cos(3.0 * grid.x(i)) * std::sin(2.0 * grid.y(j));
      ft(j, i) = f(i, j);
    }
  Field2D dx = fc_derivative_2d(f, Axis::X, grid, ops5(), FilterSpec::disabled());
  Field2D dyT = fc_derivative_2d(ft, Axis::Y, gridT, ops5(), FilterSpec::disabled());
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j)
      CHECK(dx(i, j) == doctest::Approx(dyT(j, i)).epsilon(1e-13));
}
