#pragma once

#include <mpfr.h>

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace fcswe::detail {

inline mpfr_prec_t bits_for_digits(unsigned digits) {
  // log2(10) = 3.3219..., plus guard bits.
  return static_cast<mpfr_prec_t>(digits * 3.3219280948873626 + 16.0);
}

/// Minimal RAII wrapper around mpfr_t with value semantics. Arithmetic
/// allocates at the precision of the left operand; hot loops should use the
/// in-place helpers below instead.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigFloat(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  void set(double x) { mpfr_set_d(v_, x, MPFR_RNDN); }
  void set(const BigFloat& o) { mpfr_set(v_, o.v_, MPFR_RNDN); }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(a.prec()); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(a.prec()); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(a.prec()); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(a.prec()); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  BigFloat operator-() const {
    BigFloat r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r;
  }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }

  BigFloat sqrt() const { BigFloat r(prec()); mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }
  BigFloat abs() const { BigFloat r(prec()); mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }

 private:
  mpfr_t v_;
};

/// Dense matrix of mpfr values at a single precision, row-major.
class MpMatrix {
 public:
  MpMatrix() = default;
  MpMatrix(std::size_t rows, std::size_t cols, mpfr_prec_t prec)
      : rows_(rows), cols_(cols), prec_(prec), data_(rows * cols, BigFloat(prec)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpfr_prec_t prec() const { return prec_; }

  BigFloat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigFloat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  mpfr_prec_t prec_ = 64;
  std::vector<BigFloat> data_;
};

// In-place helpers for hot loops (no temporary allocation).
inline void mp_fma(BigFloat& acc, const BigFloat& a, const BigFloat& b) {
  mpfr_fma(acc.raw(), a.raw(), b.raw(), acc.raw(), MPFR_RNDN);
}
inline void mp_fms(BigFloat& acc, const BigFloat& a, const BigFloat& b) {
  // acc -= a*b
  mpfr_fms(acc.raw(), a.raw(), b.raw(), acc.raw(), MPFR_RNDN);
  mpfr_neg(acc.raw(), acc.raw(), MPFR_RNDN);
}

/// Dot product of two column slices of matrices.
inline BigFloat mp_col_dot(const MpMatrix& a, std::size_t ca, const MpMatrix& b,
                           std::size_t cb) {
  BigFloat s(a.prec());
  for (std::size_t i = 0; i < a.rows(); ++i) mp_fma(s, a.at(i, ca), b.at(i, cb));
  return s;
}

}  // namespace fcswe::detail
