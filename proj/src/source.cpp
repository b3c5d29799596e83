#include "fcswe/source.hpp"

#include <cmath>

namespace fcswe {

namespace {

class ZeroSource1D final : public Source1D {
 public:
  void eval(double, const Grid1D&, std::span<double> xi, std::span<double> xi_x,
            std::span<double> xi_t) override {
    std::fill(xi.begin(), xi.end(), 0.0);
    std::fill(xi_x.begin(), xi_x.end(), 0.0);
    std::fill(xi_t.begin(), xi_t.end(), 0.0);
  }
  bool is_zero() const override { return true; }
};

class ZeroSource2D final : public Source2D {
 public:
  void eval(double, const Grid2D&, Field2D& xi, Field2D& xi_x, Field2D& xi_y,
            Field2D& xi_t) override {
    std::fill(xi.raw().begin(), xi.raw().end(), 0.0);
    std::fill(xi_x.raw().begin(), xi_x.raw().end(), 0.0);
    std::fill(xi_y.raw().begin(), xi_y.raw().end(), 0.0);
    std::fill(xi_t.raw().begin(), xi_t.raw().end(), 0.0);
  }
  bool is_zero() const override { return true; }
};

class AnalyticSource1D final : public Source1D {
 public:
  explicit AnalyticSource1D(AnalyticSource1DFns fns) : fns_(std::move(fns)) {}
  void eval(double t, const Grid1D& grid, std::span<double> xi, std::span<double> xi_x,
            std::span<double> xi_t) override {
    for (std::size_t i = 0; i < grid.n; ++i) {
      const double x = grid.x(i);
      xi[i] = fns_.xi(x, t);
      xi_x[i] = fns_.xi_x(x, t);
      xi_t[i] = fns_.xi_t(x, t);
    }
  }

 private:
  AnalyticSource1DFns fns_;
};

class AnalyticSource2D final : public Source2D {
 public:
  explicit AnalyticSource2D(AnalyticSource2DFns fns) : fns_(std::move(fns)) {}
  void eval(double t, const Grid2D& grid, Field2D& xi, Field2D& xi_x, Field2D& xi_y,
            Field2D& xi_t) override {
    for (std::size_t i = 0; i < grid.nx(); ++i) {
      const double x = grid.x(i);
      for (std::size_t j = 0; j < grid.ny(); ++j) {
        const double y = grid.y(j);
        xi(i, j) = fns_.xi(x, y, t);
        xi_x(i, j) = fns_.xi_x(x, y, t);
        xi_y(i, j) = fns_.xi_y(x, y, t);
        xi_t(i, j) = fns_.xi_t(x, y, t);
      }
    }
  }

 private:
  AnalyticSource2DFns fns_;
};

/// Trapezoid-integrated source: holds the accumulated displacement at the last
/// committed time and integrates forward to stage times on demand.
class IntegratedSource1D final : public Source1D {
 public:
  IntegratedSource1D(RateSource1DFns fns, const Grid1D& grid)
      : fns_(std::move(fns)),
        grid_(grid),
        anchor_t_(0.0),
        xi_a_(grid.n, 0.0),
        xi_x_a_(grid.n, 0.0),
        rate_a_(grid.n, 0.0),
        rate_x_a_(grid.n, 0.0) {
    for (std::size_t i = 0; i < grid.n; ++i) {
      rate_a_[i] = fns_.xi_t(grid.x(i), 0.0);
      rate_x_a_[i] = fns_.xi_tx(grid.x(i), 0.0);
    }
  }

  void eval(double t, const Grid1D& grid, std::span<double> xi, std::span<double> xi_x,
            std::span<double> xi_t) override {
    const double h = t - anchor_t_;
    for (std::size_t i = 0; i < grid.n; ++i) {
      const double x = grid.x(i);
      const double rate = fns_.xi_t(x, t);
      xi_t[i] = rate;
      xi[i] = xi_a_[i] + 0.5 * h * (rate_a_[i] + rate);
      xi_x[i] = xi_x_a_[i] + 0.5 * h * (rate_x_a_[i] + fns_.xi_tx(x, t));
    }
  }

  void commit(double t) override {
    const double h = t - anchor_t_;
    if (h == 0.0) return;
    for (std::size_t i = 0; i < xi_a_.size(); ++i) {
      const double x = x_of_(i);
      const double rate = fns_.xi_t(x, t);
      const double rate_x = fns_.xi_tx(x, t);
      xi_a_[i] += 0.5 * h * (rate_a_[i] + rate);
      xi_x_a_[i] += 0.5 * h * (rate_x_a_[i] + rate_x);
      rate_a_[i] = rate;
      rate_x_a_[i] = rate_x;
    }
    anchor_t_ = t;
  }

 private:
  double x_of_(std::size_t i) const { return grid_.x(i); }

  RateSource1DFns fns_;
  Grid1D grid_;
  double anchor_t_;
  std::vector<double> xi_a_, xi_x_a_, rate_a_, rate_x_a_;
};

class IntegratedSource2D final : public Source2D {
 public:
  IntegratedSource2D(RateSource2DFns fns, const Grid2D& grid)
      : fns_(std::move(fns)),
        grid_(grid),
        anchor_t_(0.0),
        xi_a_(grid.nx(), grid.ny()),
        xi_x_a_(grid.nx(), grid.ny()),
        xi_y_a_(grid.nx(), grid.ny()),
        rate_a_(grid.nx(), grid.ny()),
        rate_x_a_(grid.nx(), grid.ny()),
        rate_y_a_(grid.nx(), grid.ny()) {
    for (std::size_t i = 0; i < grid.nx(); ++i)
      for (std::size_t j = 0; j < grid.ny(); ++j) {
        rate_a_(i, j) = fns_.xi_t(grid.x(i), grid.y(j), 0.0);
        rate_x_a_(i, j) = fns_.xi_tx(grid.x(i), grid.y(j), 0.0);
        rate_y_a_(i, j) = fns_.xi_ty(grid.x(i), grid.y(j), 0.0);
      }
  }

  void eval(double t, const Grid2D& grid, Field2D& xi, Field2D& xi_x, Field2D& xi_y,
            Field2D& xi_t) override {
    const double h = t - anchor_t_;
    for (std::size_t i = 0; i < grid.nx(); ++i) {
      const double x = grid.x(i);
      for (std::size_t j = 0; j < grid.ny(); ++j) {
        const double y = grid.y(j);
        const double rate = fns_.xi_t(x, y, t);
        xi_t(i, j) = rate;
        xi(i, j) = xi_a_(i, j) + 0.5 * h * (rate_a_(i, j) + rate);
        xi_x(i, j) = xi_x_a_(i, j) + 0.5 * h * (rate_x_a_(i, j) + fns_.xi_tx(x, y, t));
        xi_y(i, j) = xi_y_a_(i, j) + 0.5 * h * (rate_y_a_(i, j) + fns_.xi_ty(x, y, t));
      }
    }
  }

  void commit(double t) override {
    const double h = t - anchor_t_;
    if (h == 0.0) return;
    for (std::size_t i = 0; i < grid_.nx(); ++i) {
      const double x = grid_.x(i);
      for (std::size_t j = 0; j < grid_.ny(); ++j) {
        const double y = grid_.y(j);
        const double rate = fns_.xi_t(x, y, t);
        const double rate_x = fns_.xi_tx(x, y, t);
        const double rate_y = fns_.xi_ty(x, y, t);
        xi_a_(i, j) += 0.5 * h * (rate_a_(i, j) + rate);
        xi_x_a_(i, j) += 0.5 * h * (rate_x_a_(i, j) + rate_x);
        xi_y_a_(i, j) += 0.5 * h * (rate_y_a_(i, j) + rate_y);
        rate_a_(i, j) = rate;
        rate_x_a_(i, j) = rate_x;
        rate_y_a_(i, j) = rate_y;
      }
    }
    anchor_t_ = t;
  }

 private:
  RateSource2DFns fns_;
  Grid2D grid_;
  double anchor_t_;
  Field2D xi_a_, xi_x_a_, xi_y_a_, rate_a_, rate_x_a_, rate_y_a_;
};

}  // namespace

std::unique_ptr<Source1D> make_zero_source_1d() { return std::make_unique<ZeroSource1D>(); }
std::unique_ptr<Source2D> make_zero_source_2d() { return std::make_unique<ZeroSource2D>(); }

std::unique_ptr<Source1D> make_analytic_source_1d(AnalyticSource1DFns fns) {
  return std::make_unique<AnalyticSource1D>(std::move(fns));
}

std::unique_ptr<Source2D> make_analytic_source_2d(AnalyticSource2DFns fns) {
  return std::make_unique<AnalyticSource2D>(std::move(fns));
}

std::unique_ptr<Source1D> make_integrated_source_1d(RateSource1DFns fns, const Grid1D& grid) {
  return std::make_unique<IntegratedSource1D>(std::move(fns), grid);
}

std::unique_ptr<Source2D> make_integrated_source_2d(RateSource2DFns fns, const Grid2D& grid) {
  return std::make_unique<IntegratedSource2D>(std::move(fns), grid);
}

}  // namespace fcswe
