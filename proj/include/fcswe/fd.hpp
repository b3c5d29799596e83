#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fcswe/field.hpp"
#include "fcswe/grid.hpp"

namespace fcswe {

/// Central finite differences of order four or six. Boundary derivatives use
/// ghost values extrapolated by a polynomial of degree equal to the order.
struct FdOrder {
  unsigned order = 4;  // 4 or 6

  unsigned half_width() const { return order / 2; }
};

void fd_derivative(std::span<const double> f, double dx, FdOrder order, std::span<double> df);
std::vector<double> fd_derivative(std::span<const double> f, double dx, FdOrder order);

Field2D fd_derivative_2d(const Field2D& f, Axis axis, double spacing, FdOrder order);

}  // namespace fcswe
