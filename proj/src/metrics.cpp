#include "fcswe/metrics.hpp"

#include <cmath>

namespace fcswe {

double error_percent(std::span<const double> computed, std::span<const double> reference,
                     double normalization) {
  if (computed.size() != reference.size())
    fail(ErrorKind::InvalidConfig, "error_percent: shape mismatch");
  if (normalization == 0.0)
    fail(ErrorKind::UndefinedBaseline, "error_percent: zero normalization");
  double worst = 0.0;
  for (std::size_t i = 0; i < computed.size(); ++i)
    worst = std::max(worst, std::abs(computed[i] - reference[i]));
  return worst / std::abs(normalization) * 100.0;
}

double convergence_order(double err_coarse, double err_fine, double h_coarse,
                         double h_fine) {
  return std::log(err_coarse / err_fine) / std::log(h_coarse / h_fine);
}

std::vector<double> convergence_orders(std::span<const double> errors,
                                       std::span<const double> spacings) {
  if (errors.size() != spacings.size())
    fail(ErrorKind::InvalidConfig, "convergence_orders: shape mismatch");
  std::vector<double> orders;
  for (std::size_t i = 0; i + 1 < errors.size(); ++i)
    orders.push_back(convergence_order(errors[i], errors[i + 1], spacings[i], spacings[i + 1]));
  return orders;
}

void ErrorReport::fill_orders() {
  for (std::size_t i = 1; i < entries.size(); ++i) {
    auto& cur = entries[i];
    const auto& prev = entries[i - 1];
    if (cur.blew_up || prev.blew_up) continue;
    cur.order_eta = convergence_order(prev.err_eta, cur.err_eta, prev.spacing, cur.spacing);
    cur.order_u = convergence_order(prev.err_u, cur.err_u, prev.spacing, cur.spacing);
    if (prev.err_v > 0.0 && cur.err_v > 0.0)
      cur.order_v = convergence_order(prev.err_v, cur.err_v, prev.spacing, cur.spacing);
  }
}

double windowed_max_abs(std::span<const double> xs, std::span<const double> values,
                        std::span<const Window> exclude) {
  double worst = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    bool excluded = false;
    for (const auto& w : exclude)
      if (w.contains(xs[i])) {
        excluded = true;
        break;
      }
    if (!excluded) worst = std::max(worst, std::abs(values[i]));
  }
  return worst;
}

double highfreq_residual(std::span<const double> xs, std::span<const double> values,
                         Window include) {
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    if (!include.contains(xs[i])) continue;
    const double smooth = (values[i - 1] + values[i] + values[i + 1]) / 3.0;
    worst = std::max(worst, std::abs(values[i] - smooth));
  }
  return worst;
}

}  // namespace fcswe
