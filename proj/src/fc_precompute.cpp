#include "fcswe/fc_precompute.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>

#include "fcswe/detail/mplinalg.hpp"

namespace fcswe {

using detail::BigFloat;
using detail::MpMatrix;

unsigned PrecomputeConfig::effective_aux_modes(unsigned matching) const {
  if (aux_modes > 0) return aux_modes;
  // Twice the constraint count balances fit residual against transition
  // smoothness; the rest of the spectrum is left to the minimum-norm
  // regularization.
  const unsigned n_aux = matching + 2 * num_continuation + num_zero_points;
  unsigned cap = (n_aux - 1) / 2;
  unsigned want = 2 * (matching + num_zero_points) + 1;
  return want < cap ? want : cap;
}

void PrecomputeConfig::validate() const {
  if (num_matching_left < 1 || num_matching_right < 1)
    fail(ErrorKind::InvalidConfig, "precompute: matching point counts must be >= 1");
  if (num_continuation < 1) fail(ErrorKind::InvalidConfig, "precompute: C must be >= 1");
  if (num_zero_points < 1) fail(ErrorKind::InvalidConfig, "precompute: Z must be >= 1");
  if (oversampling < 1) fail(ErrorKind::InvalidConfig, "precompute: oversampling must be >= 1");
  if (precision_digits < 32)
    fail(ErrorKind::InvalidConfig, "precompute: precision_digits must be >= 32");
}

GramBasis build_gram_basis(unsigned m, unsigned precision_digits) {
  if (m < 1) fail(ErrorKind::InvalidConfig, "build_gram_basis: m must be >= 1");
  const mpfr_prec_t prec = detail::bits_for_digits(precision_digits);

  // Vandermonde on unit-spaced points 0, 1, ..., m-1.
  MpMatrix vand(m, m, prec);
  for (unsigned i = 0; i < m; ++i) {
    BigFloat p(1.0, prec);
    BigFloat xi(static_cast<double>(i), prec);
    for (unsigned j = 0; j < m; ++j) {
      vand.at(i, j) = p;
      p = p * xi;
    }
  }

  GramBasis basis;
  MpMatrix r;
  detail::mgs_qr(vand, basis.q, r);
  basis.coeffs = detail::upper_tri_inverse(r);
  return basis;
}

namespace {

/// Real trigonometric basis value: index 0 is the constant, odd indices are
/// cosines, even indices sines, on a period of `period`.
BigFloat trig_basis(unsigned idx, const BigFloat& x, const BigFloat& period, mpfr_prec_t prec) {
  BigFloat out(prec);
  if (idx == 0) {
    out.set(1.0);
    return out;
  }
  const unsigned k = (idx + 1) / 2;
  BigFloat arg(prec);
  mpfr_const_pi(arg.raw(), MPFR_RNDN);
  mpfr_mul_ui(arg.raw(), arg.raw(), 2 * k, MPFR_RNDN);
  mpfr_mul(arg.raw(), arg.raw(), x.raw(), MPFR_RNDN);
  mpfr_div(arg.raw(), arg.raw(), period.raw(), MPFR_RNDN);
  if (idx % 2 == 1)
    mpfr_cos(out.raw(), arg.raw(), MPFR_RNDN);
  else
    mpfr_sin(out.raw(), arg.raw(), MPFR_RNDN);
  return out;
}

BigFloat eval_poly(const MpMatrix& coeffs, unsigned col, const BigFloat& x, mpfr_prec_t prec) {
  // Horner evaluation of the degree-(m-1) polynomial stored in a coeffs column.
  const std::size_t m = coeffs.rows();
  BigFloat acc = coeffs.at(m - 1, col);
  for (std::size_t ii = m - 1; ii-- > 0;) {
    BigFloat t = acc * x;
    acc = t + coeffs.at(ii, col);
  }
  return acc;
}

/// One-sided blend operator: maps m edge samples (ordered inward -> edge, the
/// edge sample last) to C extension values that decay from the edge value to
/// zero. All geometry uses unit spacing: matching points at 0..m-1, blend
/// region m..m+C-1, zero-matched region m+C..m+C+Z-1, a further C free points
/// complete the auxiliary period of m+2C+Z.
MpMatrix build_one_sided_blend(unsigned m, const PrecomputeConfig& cfg, mpfr_prec_t prec) {
  const unsigned c_pts = cfg.num_continuation;
  const unsigned z_pts = cfg.num_zero_points;
  const unsigned e_os = cfg.oversampling;
  const unsigned n_aux = m + 2 * c_pts + z_pts;
  const unsigned n_modes = cfg.effective_aux_modes(m);
  const unsigned n_unknown = 2 * n_modes + 1;
  const unsigned rows_match = e_os * (m - 1) + 1;
  const unsigned rows_zero = e_os * (z_pts - 1) + 1;
  const unsigned n_rows = rows_match + rows_zero;

  BigFloat period(static_cast<double>(n_aux), prec);

  // Oversampled constraint locations: the matching interval [0, m-1] and the
  // zero interval [m+C, m+C+Z-1].
  std::vector<BigFloat> xs;
  xs.reserve(n_rows);
  for (unsigned i = 0; i < rows_match; ++i) {
    BigFloat x(static_cast<double>(i), prec);
    mpfr_div_ui(x.raw(), x.raw(), e_os, MPFR_RNDN);
    xs.push_back(x);
  }
  for (unsigned i = 0; i < rows_zero; ++i) {
    BigFloat x(static_cast<double>(i), prec);
    mpfr_div_ui(x.raw(), x.raw(), e_os, MPFR_RNDN);
    mpfr_add_ui(x.raw(), x.raw(), m + c_pts, MPFR_RNDN);
    xs.push_back(x);
  }

  MpMatrix a(n_rows, n_unknown, prec);
  for (unsigned r = 0; r < n_rows; ++r)
    for (unsigned c = 0; c < n_unknown; ++c) a.at(r, c) = trig_basis(c, xs[r], period, prec);

  detail::MpSvd svd = detail::jacobi_svd(a);

  BigFloat rel_tol(prec);
  {
    // Drop singular values below 10^(-digits/2) of the largest.
    BigFloat ten(10.0, prec);
    BigFloat expo(-(static_cast<double>(cfg.precision_digits) / 2.0), prec);
    mpfr_pow(rel_tol.raw(), ten.raw(), expo.raw(), MPFR_RNDN);
  }

  GramBasis basis = build_gram_basis(m, cfg.precision_digits);

  // Solve the blend fit for every basis polynomial, then evaluate on the C
  // blend points and fold in the projection Q^T to obtain the operator that
  // acts directly on raw edge samples.
  MpMatrix decay(c_pts, m, prec);  // column j: blend values of basis poly j
  for (unsigned j = 0; j < m; ++j) {
    std::vector<BigFloat> rhs;
    rhs.reserve(n_rows);
    for (unsigned r = 0; r < rows_match; ++r)
      rhs.push_back(eval_poly(basis.coeffs, j, xs[r], prec));
    for (unsigned r = rows_match; r < n_rows; ++r) rhs.emplace_back(prec);

    std::vector<BigFloat> sol = detail::svd_solve(svd, rhs, rel_tol);

    for (unsigned cidx = 0; cidx < c_pts; ++cidx) {
      BigFloat x(static_cast<double>(m + cidx), prec);
      BigFloat val(prec);
      for (unsigned c = 0; c < n_unknown; ++c)
        detail::mp_fma(val, sol[c], trig_basis(c, x, period, prec));
      decay.at(cidx, j) = val;
    }
  }

  MpMatrix blend(c_pts, m, prec);
  for (unsigned cidx = 0; cidx < c_pts; ++cidx)
    for (unsigned i = 0; i < m; ++i) {
      BigFloat s(prec);
      for (unsigned j = 0; j < m; ++j)
        detail::mp_fma(s, decay.at(cidx, j), basis.q.at(i, j));
      blend.at(cidx, i) = s;
    }
  return blend;
}

std::vector<double> round_matrix(const MpMatrix& m) {
  std::vector<double> out(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i * m.cols() + j] = m.at(i, j).to_double();
  return out;
}

std::uint64_t operator_checksum(const FCOperatorSet& ops) {
  std::uint64_t h = fnv1a64(ops.ext_from_left.data(), ops.ext_from_left.size() * sizeof(double));
  return fnv1a64(ops.ext_from_right.data(), ops.ext_from_right.size() * sizeof(double), h);
}

}  // namespace

std::uint64_t fnv1a64(const void* data, std::size_t n, std::uint64_t seed) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

FCOperatorSet build_blend_operators(const PrecomputeConfig& cfg) {
  cfg.validate();
  const mpfr_prec_t prec = detail::bits_for_digits(cfg.precision_digits);
  const unsigned c_pts = cfg.num_continuation;
  const unsigned l_pts = cfg.num_matching_left;
  const unsigned r_pts = cfg.num_matching_right;

  FCOperatorSet ops;
  ops.left = l_pts;
  ops.right = r_pts;
  ops.cont = c_pts;
  ops.zero_points = cfg.num_zero_points;
  ops.oversampling = cfg.oversampling;
  ops.precision_digits = cfg.precision_digits;

  MpMatrix blend_r = build_one_sided_blend(r_pts, cfg, prec);
  ops.ext_from_right = round_matrix(blend_r);

  // The leftward operator is the rightward one under index reversal: read the
  // extension backward and the samples outward-in. With L == R this reuses the
  // matrix just built; otherwise a second one-sided construction is needed.
  const MpMatrix& blend_l = (l_pts == r_pts)
                                ? blend_r
                                : build_one_sided_blend(l_pts, cfg, prec);
  ops.ext_from_left.resize(static_cast<std::size_t>(c_pts) * l_pts);
  for (unsigned c = 0; c < c_pts; ++c)
    for (unsigned i = 0; i < l_pts; ++i)
      ops.ext_from_left[c * l_pts + i] =
          blend_l.at(c_pts - 1 - c, l_pts - 1 - i).to_double();

  ops.checksum = operator_checksum(ops);
  for (double v : ops.ext_from_left)
    if (!std::isfinite(v)) fail(ErrorKind::PrecomputeFailure, "non-finite operator entry");
  for (double v : ops.ext_from_right)
    if (!std::isfinite(v)) fail(ErrorKind::PrecomputeFailure, "non-finite operator entry");
  return ops;
}

namespace {

constexpr char kMagic[4] = {'F', 'C', 'G', '1'};

void put_u32(std::string& buf, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
void put_u64(std::string& buf, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
std::uint32_t get_u32(const unsigned char* p) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
  return v;
}
std::uint64_t get_u64(const unsigned char* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return v;
}

}  // namespace

void save_operator_cache(const FCOperatorSet& ops, const std::string& path) {
  std::string buf;
  buf.append(kMagic, 4);
  put_u32(buf, ops.left);
  put_u32(buf, ops.right);
  put_u32(buf, ops.cont);
  put_u32(buf, ops.zero_points);
  put_u32(buf, ops.precision_digits);

  std::string payload;
  payload.resize((ops.ext_from_left.size() + ops.ext_from_right.size()) * sizeof(double));
  std::memcpy(payload.data(), ops.ext_from_left.data(), ops.ext_from_left.size() * sizeof(double));
  std::memcpy(payload.data() + ops.ext_from_left.size() * sizeof(double),
              ops.ext_from_right.data(), ops.ext_from_right.size() * sizeof(double));
  put_u64(buf, fnv1a64(payload.data(), payload.size()));
  buf += payload;

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::Io, "cannot open operator cache for writing: " + path);
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) fail(ErrorKind::Io, "short write to operator cache: " + path);
}

FCOperatorSet load_operator_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot open operator cache: " + path);
  std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (buf.size() < 4 + 5 * 4 + 8)
    fail(ErrorKind::CacheIntegrity, "operator cache truncated: " + path);
  if (std::memcmp(buf.data(), kMagic, 4) != 0)
    fail(ErrorKind::CacheIntegrity, "operator cache bad magic: " + path);

  const auto* p = reinterpret_cast<const unsigned char*>(buf.data()) + 4;
  FCOperatorSet ops;
  ops.left = get_u32(p + 0);
  ops.right = get_u32(p + 4);
  ops.cont = get_u32(p + 8);
  ops.zero_points = get_u32(p + 12);
  ops.precision_digits = get_u32(p + 16);
  const std::uint64_t want_sum = get_u64(p + 20);
  const std::size_t header = 4 + 20 + 8;

  const std::size_t n_left = static_cast<std::size_t>(ops.cont) * ops.left;
  const std::size_t n_right = static_cast<std::size_t>(ops.cont) * ops.right;
  const std::size_t payload_bytes = (n_left + n_right) * sizeof(double);
  if (buf.size() != header + payload_bytes)
    fail(ErrorKind::CacheIntegrity, "operator cache size mismatch: " + path);
  const std::uint64_t got_sum = fnv1a64(buf.data() + header, payload_bytes);
  if (got_sum != want_sum)
    fail(ErrorKind::CacheIntegrity, "operator cache checksum mismatch: " + path);

  ops.ext_from_left.resize(n_left);
  ops.ext_from_right.resize(n_right);
  std::memcpy(ops.ext_from_left.data(), buf.data() + header, n_left * sizeof(double));
  std::memcpy(ops.ext_from_right.data(), buf.data() + header + n_left * sizeof(double),
              n_right * sizeof(double));
  ops.checksum = want_sum;
  return ops;
}

FCOperatorSet load_operator_cache_checked(const std::string& path, const PrecomputeConfig& cfg) {
  FCOperatorSet ops = load_operator_cache(path);
  if (ops.left != cfg.num_matching_left || ops.right != cfg.num_matching_right ||
      ops.cont != cfg.num_continuation || ops.zero_points != cfg.num_zero_points ||
      ops.precision_digits != cfg.precision_digits) {
    fail(ErrorKind::StaleCache,
         "operator cache does not match requested configuration: " + path);
  }
  return ops;
}

FCOperatorSet ensure_operator_cache(const PrecomputeConfig& cfg, const std::string& path,
                                    bool* built) {
  if (built) *built = false;
  if (!path.empty() && std::filesystem::exists(path)) {
    try {
      return load_operator_cache_checked(path, cfg);
    } catch (const SolverError&) {
      // fall through to a rebuild on stale or corrupt caches
    }
  }
  FCOperatorSet ops = build_blend_operators(cfg);
  if (built) *built = true;
  if (!path.empty()) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    save_operator_cache(ops, path);
  }
  return ops;
}

}  // namespace fcswe
