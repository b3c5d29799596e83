#include "fcswe/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <mutex>

namespace fcswe {

namespace {
// FFTW planning is not thread-safe; execution is.
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

double FilterSpec::sigma(double mode_ratio) const {
  if (!enabled) return 1.0;
  double rp = std::pow(mode_ratio, 2.0 * static_cast<double>(p));
  return std::exp(-alpha * rp);
}

double FilterSpec::sigma_smooth(double mode_ratio) const {
  if (!enabled) return 1.0;
  double rp = std::pow(mode_ratio, 2.0 * static_cast<double>(smooth_p));
  return std::exp(-alpha * rp);
}

void fc_extend(std::span<const double> f, const FCOperatorSet& ops, std::span<double> out) {
  const std::size_t n = f.size();
  if (n < ops.left + ops.right)
    fail(ErrorKind::GridTooCoarse,
         "fc_extend: grid has fewer points than the two matching windows");
  for (std::size_t i = 0; i < n; ++i) out[i] = f[i];
  const std::size_t base = n - ops.right;
  for (unsigned c = 0; c < ops.cont; ++c) {
    double acc = 0.0;
    for (unsigned i = 0; i < ops.left; ++i) acc += ops.from_left(c, i) * f[i];
    for (unsigned i = 0; i < ops.right; ++i) acc += ops.from_right(c, i) * f[base + i];
    out[n + c] = acc;
  }
}

std::vector<double> fc_extend(std::span<const double> f, const FCOperatorSet& ops) {
  std::vector<double> out(f.size() + ops.cont);
  fc_extend(f, ops, out);
  return out;
}

namespace detail_spectral {

struct Kernel {
  std::size_t total = 0;
  double* real_buf = nullptr;
  fftw_complex* spec_buf = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan inv = nullptr;
  std::vector<double> mult;         // omega_k * sigma_k / total
  std::vector<double> smooth_mult;  // sigma_k / total

  Kernel(std::size_t t, double period, const FilterSpec& filter) : total(t) {
    {
      std::lock_guard<std::mutex> lock(plan_mutex());
      real_buf = fftw_alloc_real(total);
      spec_buf = fftw_alloc_complex(total / 2 + 1);
      fwd = fftw_plan_dft_r2c_1d(static_cast<int>(total), real_buf, spec_buf, FFTW_ESTIMATE);
      inv = fftw_plan_dft_c2r_1d(static_cast<int>(total), spec_buf, real_buf, FFTW_ESTIMATE);
    }
    const std::size_t nc = total / 2 + 1;
    const double half_modes = static_cast<double>(total) / 2.0;
    mult.resize(nc);
    smooth_mult.resize(nc);
    for (std::size_t k = 0; k < nc; ++k) {
      double omega = 2.0 * M_PI * static_cast<double>(k) / period;
      const double ratio = static_cast<double>(k) / half_modes;
      mult[k] = omega * filter.sigma(ratio) / static_cast<double>(total);
      smooth_mult[k] = filter.sigma_smooth(ratio) / static_cast<double>(total);
    }
    if (total % 2 == 0) mult[nc - 1] = 0.0;  // unpaired Nyquist mode carries no derivative
  }

  ~Kernel() {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(inv);
    fftw_free(real_buf);
    fftw_free(spec_buf);
  }
  Kernel(const Kernel&) = delete;
  Kernel& operator=(const Kernel&) = delete;

  void run(const double* in, double* out, std::size_t n_keep) {
    std::memcpy(real_buf, in, total * sizeof(double));
    fftw_execute(fwd);
    const std::size_t nc = total / 2 + 1;
    for (std::size_t k = 0; k < nc; ++k) {
      const double re = spec_buf[k][0];
      const double im = spec_buf[k][1];
      spec_buf[k][0] = -im * mult[k];
      spec_buf[k][1] = re * mult[k];
    }
    fftw_execute(inv);
    std::memcpy(out, real_buf, n_keep * sizeof(double));
  }

  void run_smooth(const double* in, double* out, std::size_t n_keep) {
    std::memcpy(real_buf, in, total * sizeof(double));
    fftw_execute(fwd);
    const std::size_t nc = total / 2 + 1;
    for (std::size_t k = 0; k < nc; ++k) {
      spec_buf[k][0] *= smooth_mult[k];
      spec_buf[k][1] *= smooth_mult[k];
    }
    fftw_execute(inv);
    std::memcpy(out, real_buf, n_keep * sizeof(double));
  }
};

}  // namespace detail_spectral

struct FcDerivative1D::Impl : detail_spectral::Kernel {
  using Kernel::Kernel;
};

FcDerivative1D::FcDerivative1D(std::size_t n, double dx, const FCOperatorSet& ops,
                               FilterSpec filter)
    : n_(n), dx_(dx), filter_(filter) {
  if (n < ops.left + ops.right)
    fail(ErrorKind::GridTooCoarse, "FcDerivative1D: grid too coarse for matching windows");
  const std::size_t total = n + ops.cont;
  impl_ = std::make_unique<Impl>(total, static_cast<double>(total) * dx, filter);
  ops_ = &ops;
  ext_.resize(total);
}

FcDerivative1D::~FcDerivative1D() = default;

void FcDerivative1D::differentiate(std::span<const double> f, std::span<double> df) {
  fc_extend(f, *ops_, ext_);
  impl_->run(ext_.data(), df.data(), n_);
}

void FcDerivative1D::smooth(std::span<double> f) {
  if (!filter_.enabled) return;
  fc_extend(f, *ops_, ext_);
  impl_->run_smooth(ext_.data(), f.data(), n_);
}

std::vector<double> fc_derivative_1d(std::span<const double> f, double dx,
                                     const FCOperatorSet& ops, FilterSpec filter) {
  FcDerivative1D d(f.size(), dx, ops, filter);
  std::vector<double> out(f.size());
  d.differentiate(f, out);
  return out;
}

FcDerivative2D::FcDerivative2D(const Grid2D& grid, const FCOperatorSet& ops,
                               FilterSpec filter_x, FilterSpec filter_y)
    : kx_(grid.nx(), grid.dx(), ops, filter_x),
      ky_(grid.ny(), grid.dy(), ops, filter_y),
      slice_in_(std::max(grid.nx(), grid.ny())),
      slice_out_(std::max(grid.nx(), grid.ny())) {}

void FcDerivative2D::d_x(const Field2D& f, Field2D& out) {
  const std::size_t nx = f.nx(), ny = f.ny();
  for (std::size_t iy = 0; iy < ny; ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) slice_in_[ix] = f(ix, iy);
    kx_.differentiate(std::span<const double>(slice_in_.data(), nx),
                      std::span<double>(slice_out_.data(), nx));
    for (std::size_t ix = 0; ix < nx; ++ix) out(ix, iy) = slice_out_[ix];
  }
}

void FcDerivative2D::d_y(const Field2D& f, Field2D& out) {
  const std::size_t nx = f.nx(), ny = f.ny();
  for (std::size_t ix = 0; ix < nx; ++ix) {
    const double* row = f.data() + ix * ny;
    ky_.differentiate(std::span<const double>(row, ny),
                      std::span<double>(slice_out_.data(), ny));
    std::memcpy(out.data() + ix * ny, slice_out_.data(), ny * sizeof(double));
  }
}

void FcDerivative2D::smooth(Field2D& f) {
  const std::size_t nx = f.nx(), ny = f.ny();
  for (std::size_t iy = 0; iy < ny; ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) slice_in_[ix] = f(ix, iy);
    kx_.smooth(std::span<double>(slice_in_.data(), nx));
    for (std::size_t ix = 0; ix < nx; ++ix) f(ix, iy) = slice_in_[ix];
  }
  for (std::size_t ix = 0; ix < nx; ++ix)
    ky_.smooth(std::span<double>(f.data() + ix * ny, ny));
}

Field2D fc_derivative_2d(const Field2D& f, Axis axis, const Grid2D& grid,
                         const FCOperatorSet& ops, FilterSpec filter) {
  Field2D out(f.nx(), f.ny());
  FcDerivative2D d(grid, ops, filter, filter);
  if (axis == Axis::X)
    d.d_x(f, out);
  else
    d.d_y(f, out);
  return out;
}

std::vector<double> periodic_spectral_derivative(std::span<const double> f, double period,
                                                 FilterSpec filter) {
  detail_spectral::Kernel kernel(f.size(), period, filter);
  std::vector<double> out(f.size());
  kernel.run(f.data(), out.data(), f.size());
  return out;
}

}  // namespace fcswe
