#include "nlcl/scheme.hpp"

#include <cmath>

#include "nlcl/convolution.hpp"
#include "nlcl/error.hpp"

namespace nlcl {

Stepper::Stepper(const ModelSpec& model, const KernelTable& table, const Grid& grid, Mode mode,
                 Backend backend)
    : model_(model), table_(table), grid_(grid), mode_(mode), backend_(backend) {}

State Stepper::step(const State& current) {
  State next;
  step_into(current, next);
  return next;
}

void Stepper::step_into(const State& current, State& next) {
  const Grid& g = grid_;
  const long n = g.n_cells;
  const long gw = g.ghost_width;
  const double t = current.t;
  const double lambda = g.lambda;
  const double* rho = current.rho.data() + gw;  // rho[j], j = -gw..n+gw-1

  if (mode_ == Mode::nonlocal) {
    interface_convolution_into(current, table_, g, backend_, conv_);
  } else {
    conv_.resize(static_cast<std::size_t>(n + 1));
    for (long i = -1; i < n; ++i) conv_[i + 1] = 0.5 * (rho[i] + rho[i + 1]);
  }

  flux_.resize(static_cast<std::size_t>(n + 1));
  const double* c = conv_.data();
  double* flux = flux_.data();
  const ModelSpec& model = model_;
  auto interface_flux = [&](long i) {
    flux[i + 1] = numerical_flux(t, g.interface(i), rho[i], rho[i + 1], c[i + 1], model, lambda);
  };

  next.rho.resize(current.rho.size());
  double* out = next.rho.data() + gw;
  auto update = [&](long j) { out[j] = rho[j] - lambda * (flux[j + 1] - flux[j]); };

  if (backend_ == Backend::openmp) {
#pragma omp parallel
    {
#pragma omp for schedule(static)
      for (long i = -1; i < n; ++i) interface_flux(i);
#pragma omp for schedule(static)
      for (long j = 0; j < n; ++j) update(j);
    }
  } else {
    for (long i = -1; i < n; ++i) interface_flux(i);
    for (long j = 0; j < n; ++j) update(j);
  }

  next.n = current.n + 1;
  next.t = static_cast<double>(next.n) * g.tau;
  for (long j = 0; j < n; ++j) {
    if (!std::isfinite(out[j])) throw NumericalBlowup(next.n, j, out[j]);
  }
  refresh_ghosts(next, g);
}

State step(const State& state, const ModelSpec& model, const KernelTable& table, const Grid& grid,
           Mode mode, Backend backend) {
  Stepper stepper(model, table, grid, mode, backend);
  return stepper.step(state);
}

}  // namespace nlcl
