#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "fcswe/detail/bigfloat.hpp"
#include "fcswe/errors.hpp"

namespace fcswe::detail {

/// Modified Gram-Schmidt QR of a (square or tall) matrix. Returns Q with
/// orthonormal columns and upper-triangular R such that A = Q R.
inline void mgs_qr(const MpMatrix& a, MpMatrix& q, MpMatrix& r) {
  const std::size_t m = a.rows(), n = a.cols();
  const mpfr_prec_t prec = a.prec();
  q = a;
  r = MpMatrix(n, n, prec);
  BigFloat tmp(prec);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      BigFloat rkj = mp_col_dot(q, k, q, j);
      r.at(k, j) = rkj;
      for (std::size_t i = 0; i < m; ++i) {
        mpfr_fms(tmp.raw(), rkj.raw(), q.at(i, k).raw(), q.at(i, j).raw(), MPFR_RNDN);
        mpfr_neg(q.at(i, j).raw(), tmp.raw(), MPFR_RNDN);
      }
    }
    BigFloat nrm = mp_col_dot(q, j, q, j).sqrt();
    if (mpfr_zero_p(nrm.raw()))
      fail(ErrorKind::PrecomputeFailure, "mgs_qr: rank-deficient column");
    r.at(j, j) = nrm;
    for (std::size_t i = 0; i < m; ++i)
      mpfr_div(q.at(i, j).raw(), q.at(i, j).raw(), nrm.raw(), MPFR_RNDN);
  }
}

/// Inverse of an upper-triangular matrix by back substitution.
inline MpMatrix upper_tri_inverse(const MpMatrix& r) {
  const std::size_t n = r.rows();
  const mpfr_prec_t prec = r.prec();
  MpMatrix inv(n, n, prec);
  for (std::size_t j = 0; j < n; ++j) {
    inv.at(j, j) = BigFloat(1.0, prec) / r.at(j, j);
    for (std::size_t ii = j; ii-- > 0;) {
      BigFloat s(prec);
      for (std::size_t k = ii + 1; k <= j; ++k) mp_fma(s, r.at(ii, k), inv.at(k, j));
      inv.at(ii, j) = (-s) / r.at(ii, ii);
    }
  }
  return inv;
}

struct MpSvd {
  MpMatrix u;               // m x n, orthonormal columns
  MpMatrix v;               // n x n
  std::vector<BigFloat> s;  // n singular values (unsorted)
};

/// One-sided Jacobi SVD: orthogonalizes the columns of A by plane rotations.
/// Suited to the tall, moderately sized, ill-conditioned systems built by the
/// operator precompute; all arithmetic at the matrix precision.
inline MpSvd jacobi_svd(const MpMatrix& a, int max_sweeps = 60) {
  const std::size_t m = a.rows(), n = a.cols();
  const mpfr_prec_t prec = a.prec();
  MpSvd out;
  out.u = a;
  out.v = MpMatrix(n, n, prec);
  for (std::size_t i = 0; i < n; ++i) out.v.at(i, i).set(1.0);

  BigFloat eps(prec);
  mpfr_set_ui_2exp(eps.raw(), 1, -(prec - 8), MPFR_RNDN);

  BigFloat t1(prec), t2(prec);
  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        BigFloat app = mp_col_dot(out.u, p, out.u, p);
        BigFloat aqq = mp_col_dot(out.u, q, out.u, q);
        BigFloat apq = mp_col_dot(out.u, p, out.u, q);
        // Rotate when |apq| > eps * sqrt(app*aqq).
        BigFloat thresh = (app * aqq).sqrt() * eps;
        if (!(apq.abs() > thresh)) continue;
        converged = false;
        // Classic Jacobi rotation parameters.
        BigFloat tau = (aqq - app) / (BigFloat(2.0, prec) * apq);
        BigFloat t(prec);
        {
          BigFloat denom = tau.abs() + (BigFloat(1.0, prec) + tau * tau).sqrt();
          t = BigFloat(1.0, prec) / denom;
          if (mpfr_sgn(tau.raw()) < 0) t = -t;
        }
        BigFloat c = BigFloat(1.0, prec) / (BigFloat(1.0, prec) + t * t).sqrt();
        BigFloat s = t * c;
        for (std::size_t i = 0; i < m; ++i) {
          mpfr_mul(t1.raw(), c.raw(), out.u.at(i, p).raw(), MPFR_RNDN);
          mpfr_fms(t1.raw(), s.raw(), out.u.at(i, q).raw(), t1.raw(), MPFR_RNDN);
          mpfr_neg(t1.raw(), t1.raw(), MPFR_RNDN);  // c*up - s*uq
          mpfr_mul(t2.raw(), s.raw(), out.u.at(i, p).raw(), MPFR_RNDN);
          mpfr_fma(t2.raw(), c.raw(), out.u.at(i, q).raw(), t2.raw(), MPFR_RNDN);
          out.u.at(i, p) = t1;
          out.u.at(i, q) = t2;
        }
        for (std::size_t i = 0; i < n; ++i) {
          mpfr_mul(t1.raw(), c.raw(), out.v.at(i, p).raw(), MPFR_RNDN);
          mpfr_fms(t1.raw(), s.raw(), out.v.at(i, q).raw(), t1.raw(), MPFR_RNDN);
          mpfr_neg(t1.raw(), t1.raw(), MPFR_RNDN);
          mpfr_mul(t2.raw(), s.raw(), out.v.at(i, p).raw(), MPFR_RNDN);
          mpfr_fma(t2.raw(), c.raw(), out.v.at(i, q).raw(), t2.raw(), MPFR_RNDN);
          out.v.at(i, p) = t1;
          out.v.at(i, q) = t2;
        }
      }
    }
  }
  if (!converged)
    fail(ErrorKind::PrecomputeFailure, "jacobi_svd: no convergence within sweep limit");

  out.s.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    BigFloat nrm = mp_col_dot(out.u, j, out.u, j).sqrt();
    out.s.push_back(nrm);
    if (mpfr_zero_p(nrm.raw())) continue;
    for (std::size_t i = 0; i < m; ++i)
      mpfr_div(out.u.at(i, j).raw(), out.u.at(i, j).raw(), nrm.raw(), MPFR_RNDN);
  }
  return out;
}

/// Truncated-SVD least squares: x = sum_{s_j >= rel_tol * s_max} v_j (u_j . b) / s_j.
inline std::vector<BigFloat> svd_solve(const MpSvd& svd, const std::vector<BigFloat>& b,
                                       const BigFloat& rel_tol) {
  const std::size_t m = svd.u.rows(), n = svd.u.cols();
  const mpfr_prec_t prec = svd.u.prec();
  BigFloat smax(prec);
  for (const auto& s : svd.s)
    if (s > smax) smax = s;
  BigFloat cutoff = smax * rel_tol;

  std::vector<BigFloat> x(n, BigFloat(prec));
  for (std::size_t j = 0; j < n; ++j) {
    if (!(svd.s[j] > cutoff)) continue;
    BigFloat proj(prec);
    for (std::size_t i = 0; i < m; ++i) mp_fma(proj, svd.u.at(i, j), b[i]);
    mpfr_div(proj.raw(), proj.raw(), svd.s[j].raw(), MPFR_RNDN);
    for (std::size_t i = 0; i < n; ++i) mp_fma(x[i], svd.v.at(i, j), proj);
  }
  return x;
}

/// Symmetric positive definite solve via Cholesky; used by test oracles that
/// re-solve the blend systems through normal equations.
inline std::vector<BigFloat> cholesky_solve(const MpMatrix& a, const std::vector<BigFloat>& b) {
  const std::size_t n = a.rows();
  const mpfr_prec_t prec = a.prec();
  MpMatrix l(n, n, prec);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      BigFloat s = a.at(i, j);
      for (std::size_t k = 0; k < j; ++k) mp_fms(s, l.at(i, k), l.at(j, k));
      if (i == j) {
        if (!(s > BigFloat(0.0, prec)))
          fail(ErrorKind::PrecomputeFailure, "cholesky: matrix not positive definite");
        l.at(i, i) = s.sqrt();
      } else {
        l.at(i, j) = s / l.at(j, j);
      }
    }
  }
  std::vector<BigFloat> y(n, BigFloat(prec));
  for (std::size_t i = 0; i < n; ++i) {
    BigFloat s = b[i];
    for (std::size_t k = 0; k < i; ++k) mp_fms(s, l.at(i, k), y[k]);
    y[i] = s / l.at(i, i);
  }
  std::vector<BigFloat> x(n, BigFloat(prec));
  for (std::size_t ii = n; ii-- > 0;) {
    BigFloat s = y[ii];
    for (std::size_t k = ii + 1; k < n; ++k) mp_fms(s, l.at(k, ii), x[k]);
    x[ii] = s / l.at(ii, ii);
  }
  return x;
}

}  // namespace fcswe::detail
