#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fcswe/errors.hpp"

namespace fcswe {

/// Percent relative max-norm error: max|computed - reference| normalized by a
/// reference scale (usually max|reference| over the whole run), times 100.
double error_percent(std::span<const double> computed, std::span<const double> reference,
                     double normalization);

/// Observed order between two errors at spacings h_coarse > h_fine.
double convergence_order(double err_coarse, double err_fine, double h_coarse, double h_fine);

/// Orders for a refinement ladder; entry i compares levels i and i+1.
std::vector<double> convergence_orders(std::span<const double> errors,
                                       std::span<const double> spacings);

/// One row of a convergence/benchmark table.
struct ErrorEntry {
  double spacing = 0.0;
  std::size_t n = 0;
  double err_eta = 0.0;
  double err_u = 0.0;
  double err_v = 0.0;
  double order_eta = 0.0;
  double order_u = 0.0;
  double order_v = 0.0;
  double wall_seconds = 0.0;
  bool blew_up = false;
};

struct ErrorReport {
  std::vector<ErrorEntry> entries;
  void fill_orders();
};

/// Half-open inclusion/exclusion intervals on the x axis.
struct Window {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const { return x >= lo && x <= hi; }
};

/// Largest |value| at nodes lying outside every window. Used as the spurious
/// oscillation measure: physical wave packets are excluded by construction.
double windowed_max_abs(std::span<const double> xs, std::span<const double> values,
                        std::span<const Window> exclude);

/// Largest deviation from a 3-point moving average inside a window; grid-scale
/// oscillation detector for sharp-front comparisons.
double highfreq_residual(std::span<const double> xs, std::span<const double> values,
                         Window include);

}  // namespace fcswe
