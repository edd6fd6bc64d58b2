#include "nlcl/grid.hpp"

#include <cmath>
#include <sstream>

#include "nlcl/error.hpp"
#include "nlcl/model.hpp"

namespace nlcl {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_geometry: return "invalid-geometry";
    case ErrorKind::invalid_kernel: return "invalid-kernel";
    case ErrorKind::invalid_datum: return "invalid-datum";
    case ErrorKind::registry: return "registry";
    case ErrorKind::parse: return "parse";
    case ErrorKind::config: return "config";
    case ErrorKind::cfl: return "cfl";
    case ErrorKind::mesh_condition: return "mesh-condition";
    case ErrorKind::window_underflow: return "window-underflow";
    case ErrorKind::numerical_blowup: return "numerical-blowup";
    case ErrorKind::invariant_violation: return "invariant-violation";
    case ErrorKind::misuse: return "misuse";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

namespace {

std::string blowup_message(long step, long cell, double value) {
  std::ostringstream os;
  os << "numerical blowup at step " << step << ", cell " << cell << " (value " << value << ")";
  return os.str();
}

}  // namespace

NumericalBlowup::NumericalBlowup(long step, long cell, double value)
    : Error(ErrorKind::numerical_blowup, blowup_message(step, cell, value)),
      step_(step),
      cell_(cell) {}

Grid build_grid(double x_min, double x_max, long n_cells, double lambda, double kernel_radius) {
  if (!(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
    throw Error(ErrorKind::invalid_geometry, "domain must satisfy x_min < x_max");
  }
  if (n_cells < 2) {
    throw Error(ErrorKind::invalid_geometry, "n_cells must be at least 2");
  }
  if (!(lambda > 0.0)) {
    throw Error(ErrorKind::invalid_geometry, "lambda must be positive");
  }
  if (!(kernel_radius >= 0.0)) {
    throw Error(ErrorKind::invalid_geometry, "kernel radius must be non-negative");
  }
  Grid g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.n_cells = n_cells;
  g.h = (x_max - x_min) / static_cast<double>(n_cells);
  g.lambda = lambda;
  g.tau = lambda * g.h;
  // Guard against ceil(0.25/0.01) = 26 from rounding noise.
  const double reach = kernel_radius / g.h;
  const double nearest = std::round(reach);
  const double cells = std::abs(reach - nearest) < 1e-9 * std::max(1.0, reach) ? nearest
                                                                               : std::ceil(reach);
  g.ghost_width = static_cast<long>(cells) + 1;
  return g;
}

bool check_mesh_condition(const Grid& grid, const ModelSpec& model) {
  if (model.C == 0.0) return true;
  return grid.h < 1.0 / model.C;
}

StableLambda max_stable_lambda(const ModelSpec& model, double cap) {
  if (model.norm_v == 0.0) return {cap, true};
  return {1.0 / (6.0 * (1.0 + 2.0 * model.norm_dr_f) * model.norm_v), false};
}

}  // namespace nlcl
