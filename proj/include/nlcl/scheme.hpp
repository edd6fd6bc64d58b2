#pragma once

#include <vector>

#include "nlcl/backend.hpp"
#include "nlcl/grid.hpp"
#include "nlcl/kernel.hpp"
#include "nlcl/model.hpp"
#include "nlcl/state.hpp"

namespace nlcl {

enum class Mode { nonlocal, local };

/// Lax-Friedrichs type flux
///   (f(t,x,rho_l) + f(t,x,rho_r))/2 * v(c) - (rho_r - rho_l) / (6 lambda).
inline double numerical_flux(double t, double x, double rho_left, double rho_right,
                             double c, const ModelSpec& model, double lambda) {
  const double mean = 0.5 * (model.flux(t, x, rho_left) + model.flux(t, x, rho_right));
  return mean * model.velocity(c) - (rho_right - rho_left) / (6.0 * lambda);
}

/// The same flux with the convolution replaced by the interface average.
inline double local_flux(double t, double x, double rho_left, double rho_right,
                         const ModelSpec& model, double lambda) {
  return numerical_flux(t, x, rho_left, rho_right, 0.5 * (rho_left + rho_right), model,
                        lambda);
}

/// Advances states by one time step, reusing its scratch buffers.
class Stepper {
public:
  Stepper(const ModelSpec& model, const KernelTable& table, const Grid& grid,
          Mode mode = Mode::nonlocal, Backend backend = Backend::openmp);

  /// rho^{n+1} from rho^n. Ghosts of `current` must be up to date; ghosts of
  /// the result are refreshed. Throws NumericalBlowup on a non-finite value.
  State step(const State& current);
  void step_into(const State& current, State& next);

  /// Velocity argument c_{j+1/2} used by the last step (index j+1).
  const std::vector<double>& last_convolution() const { return conv_; }
  /// Interface fluxes of the last step (index j+1 for interface j+1/2).
  const std::vector<double>& last_fluxes() const { return flux_; }

private:
  const ModelSpec& model_;
  const KernelTable& table_;
  const Grid& grid_;
  Mode mode_;
  Backend backend_;
  std::vector<double> conv_;
  std::vector<double> flux_;
};

State step(const State& state, const ModelSpec& model, const KernelTable& table, const Grid& grid,
           Mode mode = Mode::nonlocal, Backend backend = Backend::openmp);

}  // namespace nlcl
