#pragma once

#include <functional>
#include <random>

#include "nlcl/datum.hpp"
#include "nlcl/grid.hpp"
#include "nlcl/state.hpp"

namespace fixture {

inline constexpr const char* kTrafficDatum =
    "-2.8:-1.8:0.5, -1.2:-0.2:0.75, 0.6:1.0:0.75, 1.5:inf:1";
inline constexpr const char* kTvDatum = "-1.35:-0.95:0.25, -0.85:-0.25:1, -0.15:0.25:0.75";
inline constexpr const char* kLimitDatum = "-1.8:-1.3:0.75, -1.3:-0.8:1";

/// State with interior values g(x_j) and ghosts copied from the edge cells.
inline nlcl::State sampled_state(const nlcl::Grid& grid, const std::function<double(double)>& g) {
  nlcl::State s;
  s.rho.assign(grid.storage_size(), 0.0);
  for (long j = 0; j < grid.n_cells; ++j) s.at(grid, j) = g(grid.cell_center(j));
  nlcl::refresh_ghosts(s, grid);
  return s;
}

/// Random bumps in [0, amplitude] on a compact part of the domain, zero elsewhere.
inline nlcl::State random_state(const nlcl::Grid& grid, unsigned seed, double amplitude = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, amplitude);
  nlcl::State s;
  s.rho.assign(grid.storage_size(), 0.0);
  const long lo = grid.n_cells / 4;
  const long hi = 3 * grid.n_cells / 4;
  for (long j = lo; j < hi; ++j) s.at(grid, j) = u(rng);
  nlcl::refresh_ghosts(s, grid);
  return s;
}

}  // namespace fixture
