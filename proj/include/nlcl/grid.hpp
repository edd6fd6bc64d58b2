#pragma once

#include <cstddef>

namespace nlcl {

struct ModelSpec;

/// Uniform space-time mesh. Interior cells are indexed 0..n_cells-1; the
/// storage of a State prepends and appends ghost_width extension cells.
struct Grid {
  double x_min = 0.0;
  double x_max = 0.0;
  double h = 0.0;
  double tau = 0.0;
  double lambda = 0.0;
  long n_cells = 0;
  long ghost_width = 0;

  double cell_center(long j) const { return x_min + (static_cast<double>(j) + 0.5) * h; }
  double cell_left(long j) const { return x_min + static_cast<double>(j) * h; }
  /// Position of interface j+1/2 (between cells j and j+1).
  double interface(long j) const { return x_min + static_cast<double>(j + 1) * h; }
  std::size_t storage_size() const { return static_cast<std::size_t>(n_cells + 2 * ghost_width); }
};

Grid build_grid(double x_min, double x_max, long n_cells, double lambda, double kernel_radius);

/// h < 1/C, always true for C = 0.
bool check_mesh_condition(const Grid& grid, const ModelSpec& model);

struct StableLambda {
  double value = 0.0;
  bool capped = false;  // velocity norm vanished; value is the cap
};

inline constexpr double kDefaultLambdaCap = 1.0;

/// Largest lambda admitted by the CFL condition
/// lambda (1 + 2 |d_rho f|) |v| <= 1/6.
StableLambda max_stable_lambda(const ModelSpec& model, double cap = kDefaultLambdaCap);

}  // namespace nlcl
