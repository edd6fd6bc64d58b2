#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "nlcl/kernel.hpp"

namespace nlcl {

/// The flux triple (f, v, eta) together with the norm metadata consumed by
/// the CFL condition and the a-priori bound constants. Norms are taken over
/// the declared invariant range.
struct ModelSpec {
  std::string name;
  std::function<double(double t, double x, double rho)> flux;
  std::function<double(double r)> velocity;
  KernelSpec kernel;

  double C = 0.0;           // |d_x f|, |d_xx f| <= C |rho|
  double norm_dr_f = 0.0;   // |d_rho f|
  double norm_drx_f = 0.0;  // |d_rho d_x f|
  double norm_v = 0.0;
  double norm_dv = 0.0;
  double norm_d2v = 0.0;
  double rho_lo = 0.0;
  double rho_hi = 1.0;
  std::vector<double> flat_levels;  // rho-bar with f(t, x, rho-bar) = 0
};

struct ModelParams {
  double v_max = 1.0;  // traffic
  double a = 0.0;      // tv_example support
  double b = 0.2;
  double width = 0.25;  // limit_family half-width
};

inline constexpr std::string_view kBuiltinModels[] = {
    "traffic_forward", "traffic_backward", "tv_example", "limit_family"};

/// Throws ErrorKind::registry for an unknown name.
ModelSpec builtin_model(std::string_view name, const ModelParams& params = {});

}  // namespace nlcl
