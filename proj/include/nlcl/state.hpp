#pragma once

#include <span>
#include <vector>

#include "nlcl/grid.hpp"

namespace nlcl {

/// One time level of cell averages, ghost cells included.
struct State {
  std::vector<double> rho;
  double t = 0.0;
  long n = 0;

  double& at(const Grid& g, long j) { return rho[static_cast<std::size_t>(j + g.ghost_width)]; }
  double at(const Grid& g, long j) const { return rho[static_cast<std::size_t>(j + g.ghost_width)]; }

  std::span<const double> interior(const Grid& g) const {
    return std::span<const double>(rho).subspan(static_cast<std::size_t>(g.ghost_width),
                                                static_cast<std::size_t>(g.n_cells));
  }
};

/// Overwrites the ghost cells with the nearest interior value.
void refresh_ghosts(State& state, const Grid& grid);

}  // namespace nlcl
