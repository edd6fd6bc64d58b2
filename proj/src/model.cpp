#include "nlcl/model.hpp"

#include <string>

#include "nlcl/error.hpp"

namespace nlcl {

namespace {

ModelSpec traffic(std::string name, double v_max, double a, double b) {
  ModelSpec m;
  m.name = std::move(name);
  m.flux = [](double, double, double rho) { return rho * (1.0 - rho); };
  m.velocity = [v_max](double r) { return v_max * (1.0 - r); };
  m.kernel = normalize_kernel(a, b);
  m.C = 0.0;
  m.norm_dr_f = 1.0;  // |1 - 2 rho| on [0, 1]
  m.norm_drx_f = 0.0;
  m.norm_v = v_max;
  m.norm_dv = v_max;
  m.norm_d2v = 0.0;
  m.rho_lo = 0.0;
  m.rho_hi = 1.0;
  m.flat_levels = {0.0, 1.0};
  return m;
}

// Solutions overshoot 1, so the declared range is [0, 2], on which |1 - r| <= 1.
ModelSpec tv_example(double a, double b) {
  ModelSpec m;
  m.name = "tv_example";
  m.flux = [](double, double, double rho) { return rho; };
  m.velocity = [](double r) { return 1.0 - r; };
  m.kernel = normalize_kernel(a, b);
  m.norm_dr_f = 1.0;
  m.norm_v = 1.0;
  m.norm_dv = 1.0;
  m.norm_d2v = 0.0;
  m.rho_lo = 0.0;
  m.rho_hi = 2.0;
  m.flat_levels = {0.0};
  return m;
}

// v(r) = (1 - r)^3 for r < 1 and 0 beyond, held at v(0) = 1 for negative r.
ModelSpec limit_family(double width) {
  if (!(width > 0.0)) throw Error(ErrorKind::invalid_kernel, "limit_family width must be positive");
  ModelSpec m;
  m.name = "limit_family";
  m.flux = [](double, double, double rho) { return rho; };
  m.velocity = [](double r) {
    if (r >= 1.0) return 0.0;
    if (r <= 0.0) return 1.0;
    const double s = 1.0 - r;
    return s * s * s;
  };
  m.kernel = normalize_kernel(-width, width);
  m.norm_dr_f = 1.0;
  m.norm_v = 1.0;
  m.norm_dv = 3.0;
  m.norm_d2v = 6.0;
  m.rho_lo = 0.0;
  m.rho_hi = 1.0;
  m.flat_levels = {0.0};
  return m;
}

}  // namespace

ModelSpec builtin_model(std::string_view name, const ModelParams& params) {
  if (name == "traffic_forward") return traffic("traffic_forward", params.v_max, -0.25, 0.0);
  if (name == "traffic_backward") return traffic("traffic_backward", params.v_max, 0.0, 0.25);
  if (name == "tv_example") return tv_example(params.a, params.b);
  if (name == "limit_family") return limit_family(params.width);
  throw Error(ErrorKind::registry, "unknown model '" + std::string(name) + "'");
}

}  // namespace nlcl
