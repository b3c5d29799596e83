#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fcswe/detail/bigfloat.hpp"
#include "fcswe/errors.hpp"

namespace fcswe {

/// Offline construction parameters for the FC(Gram) continuation operators.
struct PrecomputeConfig {
  unsigned num_matching_left = 5;    // L
  unsigned num_matching_right = 5;   // R
  unsigned num_continuation = 25;    // C
  unsigned num_zero_points = 5;      // Z; mirroring the matching count makes the
                                     // two one-sided blends exactly complementary
  unsigned oversampling = 20;        // samples per unit grid interval in the aux fit
  unsigned precision_digits = 256;   // decimal digits for the extended-precision stage
  unsigned aux_modes = 0;            // trig modes of the aux fit; 0 picks the default rule

  unsigned effective_aux_modes(unsigned matching) const;
  void validate() const;
};

/// Precomputed continuation operators. ext_from_left is C x L, ext_from_right
/// is C x R, both row-major. Given samples fl = f[0..L) and fr = f[N-R..N),
/// the periodic extension values are ext_from_left*fl + ext_from_right*fr.
/// Immutable after construction; safe to share across threads.
struct FCOperatorSet {
  unsigned left = 5;
  unsigned right = 5;
  unsigned cont = 25;
  unsigned zero_points = 12;
  unsigned oversampling = 20;
  unsigned precision_digits = 256;
  std::vector<double> ext_from_left;   // cont x left
  std::vector<double> ext_from_right;  // cont x right
  std::uint64_t checksum = 0;

  double from_left(unsigned c, unsigned i) const { return ext_from_left[c * left + i]; }
  double from_right(unsigned c, unsigned i) const { return ext_from_right[c * right + i]; }
};

/// Orthonormal polynomial basis on m unit-spaced points, built in extended
/// precision by modified Gram-Schmidt on the Vandermonde matrix. Column j
/// spans polynomials of degree <= j. Also returns the monomial coefficients
/// of each basis polynomial (coeffs column j belongs to basis column j).
struct GramBasis {
  detail::MpMatrix q;       // m x m, orthonormal columns
  detail::MpMatrix coeffs;  // m x m, monomial coefficients
};

GramBasis build_gram_basis(unsigned m, unsigned precision_digits);

/// Build the pair of blend-to-zero extension operators from a config.
FCOperatorSet build_blend_operators(const PrecomputeConfig& cfg);

/// Binary operator-cache file I/O. Header: magic "FCG1", u32 L, R, C, Z,
/// precision_digits, u64 payload checksum; payload is ext_from_left then
/// ext_from_right as row-major little-endian doubles.
void save_operator_cache(const FCOperatorSet& ops, const std::string& path);
FCOperatorSet load_operator_cache(const std::string& path);

/// Load a cache and verify it matches the requested configuration; throws a
/// stale-cache error on dimension/precision mismatch.
FCOperatorSet load_operator_cache_checked(const std::string& path, const PrecomputeConfig& cfg);

/// Load-or-build convenience used by the CLI and scenario runners.
/// When building, the result is saved to `path` (unless empty).
FCOperatorSet ensure_operator_cache(const PrecomputeConfig& cfg, const std::string& path,
                                    bool* built = nullptr);

std::uint64_t fnv1a64(const void* data, std::size_t n, std::uint64_t seed = 0xcbf29ce484222325ull);

}  // namespace fcswe
