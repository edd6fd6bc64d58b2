#pragma once

#include <vector>

#include "nlcl/backend.hpp"
#include "nlcl/grid.hpp"
#include "nlcl/kernel.hpp"
#include "nlcl/state.hpp"

namespace nlcl {

/// c_{j+1/2} for the interfaces j = -1..n_cells-1 (index j+1), i.e. every
/// interface bounding an interior cell.
struct ConvolutionField {
  std::vector<double> values;
  long time_index = 0;

  double at_interface(long j) const { return values[static_cast<std::size_t>(j + 1)]; }
};

/// c_{j+1/2} = sum_m h eta_m (rho_{j-m} + rho_{j-m+1}) / 2, a discretization
/// of (rho * eta)(x_{j+1/2}) = int rho(xi) eta(x_{j+1/2} - xi) dxi.
/// Throws ErrorKind::window_underflow if the ghost layer is too thin.
ConvolutionField interface_convolution(const State& state, const KernelTable& table,
                                       const Grid& grid, Backend backend = Backend::openmp);

/// Same as above, writing into a caller-owned buffer (resized as needed).
void interface_convolution_into(const State& state, const KernelTable& table, const Grid& grid,
                                Backend backend, std::vector<double>& out);

}  // namespace nlcl
