#pragma once

#include <functional>
#include <memory>
#include <span>

#include "fcswe/field.hpp"
#include "fcswe/grid.hpp"

namespace fcswe {

enum class SourceVariant { Zero, Dynamic, StaticAtT0, StaticAtTeqk };

/// Time-dependent seafloor displacement seen by the solver. The right-hand
/// side needs xi (for the depth), its spatial gradient, and xi_t at arbitrary
/// stage times; commit(t) advances any internal quadrature state once a step
/// is accepted.
class Source1D {
 public:
  virtual ~Source1D() = default;
  virtual void eval(double t, const Grid1D& grid, std::span<double> xi,
                    std::span<double> xi_x, std::span<double> xi_t) = 0;
  virtual void commit(double /*t*/) {}
  virtual bool is_zero() const { return false; }
};

class Source2D {
 public:
  virtual ~Source2D() = default;
  virtual void eval(double t, const Grid2D& grid, Field2D& xi, Field2D& xi_x,
                    Field2D& xi_y, Field2D& xi_t) = 0;
  virtual void commit(double /*t*/) {}
  virtual bool is_zero() const { return false; }
};

std::unique_ptr<Source1D> make_zero_source_1d();
std::unique_ptr<Source2D> make_zero_source_2d();

/// Closed-form source: xi, xi_x, xi_t given as functions of (x, t).
struct AnalyticSource1DFns {
  std::function<double(double x, double t)> xi;
  std::function<double(double x, double t)> xi_x;
  std::function<double(double x, double t)> xi_t;
};
std::unique_ptr<Source1D> make_analytic_source_1d(AnalyticSource1DFns fns);

struct AnalyticSource2DFns {
  std::function<double(double x, double y, double t)> xi;
  std::function<double(double x, double y, double t)> xi_x;
  std::function<double(double x, double y, double t)> xi_y;
  std::function<double(double x, double y, double t)> xi_t;
};
std::unique_ptr<Source2D> make_analytic_source_2d(AnalyticSource2DFns fns);

/// Source defined by its velocity field only; displacement and displacement
/// gradient accumulate by the trapezoid rule at the committed step times.
struct RateSource1DFns {
  std::function<double(double x, double t)> xi_t;
  std::function<double(double x, double t)> xi_tx;  // d/dx of xi_t
};
std::unique_ptr<Source1D> make_integrated_source_1d(RateSource1DFns fns, const Grid1D& grid);

struct RateSource2DFns {
  std::function<double(double x, double y, double t)> xi_t;
  std::function<double(double x, double y, double t)> xi_tx;
  std::function<double(double x, double y, double t)> xi_ty;
};
std::unique_ptr<Source2D> make_integrated_source_2d(RateSource2DFns fns, const Grid2D& grid);

}  // namespace fcswe
