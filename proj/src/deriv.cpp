#include "fcswe/deriv.hpp"

#include "fcswe/errors.hpp"

namespace fcswe {

Backend backend_from_name(const std::string& name) {
  if (name == "fc") return Backend::Fc;
  if (name == "fd4") return Backend::Fd4;
  if (name == "fd6") return Backend::Fd6;
  fail(ErrorKind::Parse, "unknown backend '" + name + "' (expected fc, fd4, or fd6)");
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Fc: return "fc";
    case Backend::Fd4: return "fd4";
    case Backend::Fd6: return "fd6";
  }
  return "?";
}

namespace {

class FcDeriv1DBackend final : public Deriv1D {
 public:
  FcDeriv1DBackend(std::size_t n, double dx, const FCOperatorSet& ops, FilterSpec filter)
      : impl_(n, dx, ops, filter) {}
  void differentiate(std::span<const double> f, std::span<double> df) override {
    impl_.differentiate(f, df);
  }
  void filter_state(std::span<double> f) override { impl_.smooth(f); }

 private:
  FcDerivative1D impl_;
};

class FdDeriv1DBackend final : public Deriv1D {
 public:
  FdDeriv1DBackend(std::size_t n, double dx, FdOrder order) : n_(n), dx_(dx), order_(order) {}
  void differentiate(std::span<const double> f, std::span<double> df) override {
    fd_derivative(f, dx_, order_, df);
  }

 private:
  std::size_t n_;
  double dx_;
  FdOrder order_;
};

class FcDeriv2DBackend final : public Deriv2D {
 public:
  FcDeriv2DBackend(const Grid2D& grid, const FCOperatorSet& ops, FilterSpec fx, FilterSpec fy)
      : impl_(grid, ops, fx, fy) {}
  void d_x(const Field2D& f, Field2D& out) override { impl_.d_x(f, out); }
  void d_y(const Field2D& f, Field2D& out) override { impl_.d_y(f, out); }
  void filter_state(Field2D& f) override { impl_.smooth(f); }

 private:
  FcDerivative2D impl_;
};

class FdDeriv2DBackend final : public Deriv2D {
 public:
  FdDeriv2DBackend(const Grid2D& grid, FdOrder order) : grid_(grid), order_(order) {}
  void d_x(const Field2D& f, Field2D& out) override {
    out = fd_derivative_2d(f, Axis::X, grid_.dx(), order_);
  }
  void d_y(const Field2D& f, Field2D& out) override {
    out = fd_derivative_2d(f, Axis::Y, grid_.dy(), order_);
  }

 private:
  Grid2D grid_;
  FdOrder order_;
};

}  // namespace

std::unique_ptr<Deriv1D> make_deriv_1d(Backend b, std::size_t n, double dx,
                                       const FCOperatorSet* ops, FilterSpec filter) {
  switch (b) {
    case Backend::Fc:
      if (!ops) fail(ErrorKind::InvalidConfig, "fc backend requires an operator set");
      return std::make_unique<FcDeriv1DBackend>(n, dx, *ops, filter);
    case Backend::Fd4: return std::make_unique<FdDeriv1DBackend>(n, dx, FdOrder{4});
    case Backend::Fd6: return std::make_unique<FdDeriv1DBackend>(n, dx, FdOrder{6});
  }
  fail(ErrorKind::Internal, "unreachable backend");
}

std::unique_ptr<Deriv2D> make_deriv_2d(Backend b, const Grid2D& grid,
                                       const FCOperatorSet* ops, FilterSpec filter_x,
                                       FilterSpec filter_y) {
  switch (b) {
    case Backend::Fc:
      if (!ops) fail(ErrorKind::InvalidConfig, "fc backend requires an operator set");
      return std::make_unique<FcDeriv2DBackend>(grid, *ops, filter_x, filter_y);
    case Backend::Fd4: return std::make_unique<FdDeriv2DBackend>(grid, FdOrder{4});
    case Backend::Fd6: return std::make_unique<FdDeriv2DBackend>(grid, FdOrder{6});
  }
  fail(ErrorKind::Internal, "unreachable backend");
}

}  // namespace fcswe
