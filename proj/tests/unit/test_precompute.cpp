#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <vector>

#include "fcswe/detail/mplinalg.hpp"
#include "fcswe/fc_precompute.hpp"

using namespace fcswe;
using detail::BigFloat;
using detail::MpMatrix;

namespace {

const std::string kTmp = FCSWE_TEST_TMPDIR;

/// Independent oracle: re-solve the identical blend-to-zero least squares
/// through normal equations and Cholesky (a completely separate path from the
/// production truncated-SVD solver) and return the one-sided blend matrix that
/// maps raw edge samples to extension values, as doubles.
std::vector<double> oracle_one_sided_blend(const PrecomputeConfig& cfg) {
  const unsigned m = cfg.num_matching_right;
  const unsigned c_pts = cfg.num_continuation;
  const unsigned z_pts = cfg.num_zero_points;
  const unsigned e_os = cfg.oversampling;
  const unsigned n_aux = m + 2 * c_pts + z_pts;
  const unsigned n_modes = cfg.effective_aux_modes(m);
  const unsigned n_unknown = 2 * n_modes + 1;
  const unsigned rows_match = e_os * (m - 1) + 1;
  const unsigned rows_zero = e_os * (z_pts - 1) + 1;
  const unsigned n_rows = rows_match + rows_zero;
  const mpfr_prec_t prec = detail::bits_for_digits(cfg.precision_digits);

  auto basis_val = [&](unsigned idx, double xpos) {
    BigFloat out(prec);
    if (idx == 0) {
      out.set(1.0);
      return out;
    }
    const unsigned k = (idx + 1) / 2;
    BigFloat arg(prec);
    mpfr_const_pi(arg.raw(), MPFR_RNDN);
    mpfr_mul_ui(arg.raw(), arg.raw(), 2 * k, MPFR_RNDN);
    BigFloat x(xpos, prec);
    mpfr_mul(arg.raw(), arg.raw(), x.raw(), MPFR_RNDN);
    mpfr_div_ui(arg.raw(), arg.raw(), n_aux, MPFR_RNDN);
    if (idx % 2 == 1)
      mpfr_cos(out.raw(), arg.raw(), MPFR_RNDN);
    else
      mpfr_sin(out.raw(), arg.raw(), MPFR_RNDN);
    return out;
  };

  MpMatrix a(n_rows, n_unknown, prec);
  std::vector<double> xs(n_rows);
  for (unsigned i = 0; i < rows_match; ++i) xs[i] = double(i) / e_os;
  for (unsigned i = 0; i < rows_zero; ++i)
    xs[rows_match + i] = double(m + c_pts) + double(i) / e_os;
  for (unsigned r = 0; r < n_rows; ++r)
    for (unsigned c = 0; c < n_unknown; ++c) a.at(r, c) = basis_val(c, xs[r]);

  // Normal equations A^T A with a tiny Tikhonov shift to keep Cholesky
  // positive definite along the near-null directions the SVD-truncated
  // production solver drops.
  MpMatrix ata(n_unknown, n_unknown, prec);
  for (unsigned i = 0; i < n_unknown; ++i)
    for (unsigned j = i; j < n_unknown; ++j) {
      BigFloat s(prec);
      for (unsigned r = 0; r < n_rows; ++r) detail::mp_fma(s, a.at(r, i), a.at(r, j));
      ata.at(i, j) = s;
      ata.at(j, i) = s;
    }
  BigFloat shift(prec);
  {
    BigFloat ten(10.0, prec), expo(-double(cfg.precision_digits), prec);
    mpfr_pow(shift.raw(), ten.raw(), expo.raw(), MPFR_RNDN);
  }
  for (unsigned i = 0; i < n_unknown; ++i) ata.at(i, i) = ata.at(i, i) + shift;

  GramBasis basis = build_gram_basis(m, cfg.precision_digits);
  auto poly_val = [&](unsigned col, double xpos) {
    BigFloat x(xpos, prec);
    BigFloat acc = basis.coeffs.at(m - 1, col);
    for (std::size_t ii = m - 1; ii-- > 0;) acc = acc * x + basis.coeffs.at(ii, col);
    return acc;
  };

  MpMatrix decay(c_pts, m, prec);
  for (unsigned j = 0; j < m; ++j) {
    std::vector<BigFloat> atb(n_unknown, BigFloat(prec));
    for (unsigned r = 0; r < rows_match; ++r) {
      BigFloat fr = poly_val(j, xs[r]);
      for (unsigned c = 0; c < n_unknown; ++c) detail::mp_fma(atb[c], a.at(r, c), fr);
    }
    std::vector<BigFloat> sol = detail::cholesky_solve(ata, atb);
    for (unsigned cidx = 0; cidx < c_pts; ++cidx) {
      BigFloat val(prec);
      for (unsigned c = 0; c < n_unknown; ++c)
        detail::mp_fma(val, sol[c], basis_val(c, double(m + cidx)));
      decay.at(cidx, j) = val;
    }
  }

  std::vector<double> blend(std::size_t(c_pts) * m);
  for (unsigned cidx = 0; cidx < c_pts; ++cidx)
    for (unsigned i = 0; i < m; ++i) {
      BigFloat s(prec);
      for (unsigned j = 0; j < m; ++j) detail::mp_fma(s, decay.at(cidx, j), basis.q.at(i, j));
      blend[cidx * m + i] = s.to_double();
    }
  return blend;
}

const FCOperatorSet& default_ops() {
  static FCOperatorSet ops = [] {
    PrecomputeConfig cfg;
    return ensure_operator_cache(cfg, kTmp + "/ops_L5R5C25.fcg");
  }();
  return ops;
}

}  // namespace

TEST_CASE("gram basis: single point normalizes to one") {
  GramBasis b = build_gram_basis(1, 64);
  CHECK(b.q.at(0, 0).to_double() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("gram basis: zero matching points rejected") {
  CHECK_THROWS_AS(build_gram_basis(0, 64), SolverError);
}

TEST_CASE("gram basis: orthonormality at extended precision") {
  const unsigned digits = 256;
  GramBasis b = build_gram_basis(5, digits);
  const mpfr_prec_t prec = detail::bits_for_digits(digits);
  double worst = 0.0;
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned j = 0; j < 5; ++j) {
      BigFloat dot = detail::mp_col_dot(b.q, i, b.q, j);
      double expect = (i == j) ? 1.0 : 0.0;
      BigFloat diff = dot - BigFloat(expect, prec);
      worst = std::max(worst, std::abs(diff.to_double()));
    }
  CHECK(worst < 1e-128);
}

TEST_CASE("gram basis: first column is the normalized constant") {
  GramBasis b = build_gram_basis(5, 128);
  const double expect = 1.0 / std::sqrt(5.0);
  for (unsigned i = 0; i < 5; ++i)
    CHECK(b.q.at(i, 0).to_double() == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("gram basis: reproduces polynomials of degree < L") {
  GramBasis b = build_gram_basis(5, 128);
  // p(x) = 2 - x + 0.5 x^3 sampled on the matching points; Q Q^T p = p.
  std::vector<double> p(5), qqt(5, 0.0);
  for (int i = 0; i < 5; ++i) p[i] = 2.0 - i + 0.5 * i * i * i;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 5; ++k) acc += b.q.at(i, k).to_double() * b.q.at(j, k).to_double();
      qqt[i] += acc * p[j];
    }
  for (int i = 0; i < 5; ++i) CHECK(qqt[i] == doctest::Approx(p[i]).epsilon(1e-13));
}

TEST_CASE("blend operators: constant input decays to near zero") {
  const FCOperatorSet& ops = default_ops();
  std::vector<double> decay(ops.cont, 0.0);
  for (unsigned c = 0; c < ops.cont; ++c)
    for (unsigned i = 0; i < ops.right; ++i) decay[c] += ops.from_right(c, i);
  CHECK(std::abs(decay.front()) > 0.5);
  CHECK(std::abs(decay.back()) < 1e-10);
}

TEST_CASE("blend operators: left operator is the reversed right operator") {
  const FCOperatorSet& ops = default_ops();
  REQUIRE(ops.left == ops.right);
  for (unsigned c = 0; c < ops.cont; ++c)
    for (unsigned i = 0; i < ops.left; ++i)
      CHECK(ops.from_left(c, i) ==
            doctest::Approx(ops.from_right(ops.cont - 1 - c, ops.right - 1 - i))
                .epsilon(1e-15));
}

TEST_CASE("blend operators: match independent normal-equations oracle") {
  PrecomputeConfig cfg;
  const FCOperatorSet& ops = default_ops();
  std::vector<double> oracle = oracle_one_sided_blend(cfg);
  double scale = 0.0, worst = 0.0;
  for (std::size_t k = 0; k < oracle.size(); ++k) {
    scale = std::max(scale, std::abs(oracle[k]));
    worst = std::max(worst, std::abs(oracle[k] - ops.ext_from_right[k]));
  }
  CHECK(worst / scale < 1e-10);
}

TEST_CASE("blend operators: stable under extra precision") {
  PrecomputeConfig lo, hi;
  hi.precision_digits = 300;
  FCOperatorSet a = ensure_operator_cache(lo, kTmp + "/ops_L5R5C25.fcg");
  FCOperatorSet b = ensure_operator_cache(hi, kTmp + "/ops_L5R5C25_d300.fcg");
  double scale = 0.0, worst = 0.0;
  for (std::size_t k = 0; k < a.ext_from_right.size(); ++k) {
    scale = std::max(scale, std::abs(a.ext_from_right[k]));
    worst = std::max(worst, std::abs(a.ext_from_right[k] - b.ext_from_right[k]));
  }
  CHECK(worst / scale < 1e-14);
}

TEST_CASE("operator cache: round trip is bit exact") {
  const FCOperatorSet& ops = default_ops();
  const std::string path = kTmp + "/roundtrip.fcg";
  save_operator_cache(ops, path);
  FCOperatorSet back = load_operator_cache(path);
  REQUIRE(back.ext_from_left.size() == ops.ext_from_left.size());
  REQUIRE(back.ext_from_right.size() == ops.ext_from_right.size());
  CHECK(std::memcmp(back.ext_from_left.data(), ops.ext_from_left.data(),
                    ops.ext_from_left.size() * sizeof(double)) == 0);
  CHECK(std::memcmp(back.ext_from_right.data(), ops.ext_from_right.data(),
                    ops.ext_from_right.size() * sizeof(double)) == 0);
  CHECK(back.checksum == ops.checksum);
}

TEST_CASE("operator cache: truncation detected") {
  const FCOperatorSet& ops = default_ops();
  const std::string path = kTmp + "/truncated.fcg";
  save_operator_cache(ops, path);
  auto size = std::filesystem::file_size(path);
  std::filesystem::resize_file(path, size - 16);
  try {
    load_operator_cache(path);
    FAIL("expected cache-integrity error");
  } catch (const SolverError& e) {
    CHECK(e.kind() == ErrorKind::CacheIntegrity);
  }
}

TEST_CASE("operator cache: corrupted payload detected") {
  const FCOperatorSet& ops = default_ops();
  const std::string path = kTmp + "/corrupt.fcg";
  save_operator_cache(ops, path);
  {
    std::fstream f(path, std::ios::binary | std::ios::in | std::ios::out);
    f.seekp(64);
    char junk = 0x5a;
    f.write(&junk, 1);
  }
  try {
    load_operator_cache(path);
    FAIL("expected cache-integrity error");
  } catch (const SolverError& e) {
    CHECK(e.kind() == ErrorKind::CacheIntegrity);
  }
}

TEST_CASE("operator cache: stale configuration detected") {
  const FCOperatorSet& ops = default_ops();
  const std::string path = kTmp + "/stale.fcg";
  save_operator_cache(ops, path);
  PrecomputeConfig want;
  want.num_continuation = 30;
  try {
    load_operator_cache_checked(path, want);
    FAIL("expected stale-cache error");
  } catch (const SolverError& e) {
    CHECK(e.kind() == ErrorKind::StaleCache);
  }
}
