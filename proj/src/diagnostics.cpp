#include "nlcl/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nlcl/convolution.hpp"
#include "nlcl/error.hpp"

namespace nlcl {

namespace {

// Neumaier summation keeps the L1 conservation check at round-off level.
class CompensatedSum {
public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// (K2 t + TV0) e^{K1 t}, with 0 * inf read as 0.
double grown(double base, double rate, double t) {
  if (base == 0.0) return 0.0;
  return base * std::exp(rate * t);
}

}  // namespace

double TheoreticalConstants::bound_linf(double t) const { return grown(datum_linf, L, t); }

double TheoreticalConstants::bound_tv(double t) const { return grown(K2 * t + datum_tv, K1, t); }

double TheoreticalConstants::lipschitz(double T) const {
  return c_const + grown(c_tv_factor * (K2 * T + datum_tv), K1, T);
}

TheoreticalConstants theoretical_constants(const ModelSpec& model, double datum_l1,
                                           double datum_tv, double lambda, double datum_linf) {
  const double C = model.C;
  const double drf = model.norm_dr_f;
  const double deta = model.kernel.norm_deta;
  const double deta_w1 = model.kernel.norm_deta + model.kernel.norm_d2eta;
  const double v_w2 = model.norm_v + model.norm_dv + model.norm_d2v;
  const double l1 = datum_l1;

  TheoreticalConstants k;
  k.lambda = lambda;
  k.datum_l1 = datum_l1;
  k.datum_tv = datum_tv;
  k.datum_linf = datum_linf;
  k.lambda_star = max_stable_lambda(model).value;
  k.L = C * model.norm_v + drf * model.norm_dv * l1 * deta;
  k.K1 = 0.5 * drf * model.norm_dv * l1 * deta + model.norm_drx_f * model.norm_v;
  k.K2 = (1.5 * C + (drf + C) * deta_w1 * l1 + 0.5 * (C + drf * (2.0 + l1 * deta)) * deta_w1) *
         v_w2 * l1;
  k.c_const = C * model.norm_v * l1 + 2.0 * drf * l1 * l1 * deta * model.norm_dv;
  k.c_tv_factor = drf * model.norm_v + lambda / 3.0;
  return k;
}

double l1_norm(const State& state, const Grid& grid) {
  CompensatedSum sum;
  for (double x : state.interior(grid)) sum.add(std::abs(x));
  return grid.h * sum.value();
}

double linf_norm(const State& state, const Grid& grid) {
  double m = 0.0;
  for (double x : state.interior(grid)) m = std::max(m, std::abs(x));
  return m;
}

double total_variation(const State& state, const Grid& grid) {
  CompensatedSum sum;
  const long first = grid.ghost_width > 0 ? -1 : 0;
  const long last = grid.ghost_width > 0 ? grid.n_cells : grid.n_cells - 1;
  for (long j = first; j < last; ++j) sum.add(std::abs(state.at(grid, j + 1) - state.at(grid, j)));
  return sum.value();
}

double l1_distance(std::span<const double> a, std::span<const double> b, double h) {
  if (a.size() != b.size()) throw Error(ErrorKind::misuse, "l1_distance: length mismatch");
  CompensatedSum sum;
  for (std::size_t i = 0; i < a.size(); ++i) sum.add(std::abs(a[i] - b[i]));
  return h * sum.value();
}

double l1_distance(const State& a, const State& b, const Grid& grid) {
  if (a.rho.size() != b.rho.size() || a.rho.size() != grid.storage_size()) {
    throw Error(ErrorKind::misuse, "l1_distance: states do not share the grid");
  }
  return l1_distance(a.interior(grid), b.interior(grid), grid.h);
}

std::vector<double> k_lattice(double lo, double hi, int count) {
  std::vector<double> ks;
  if (count <= 0) return ks;
  if (count == 1) return {lo};
  ks.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) ks.push_back(lo + (hi - lo) * i / (count - 1));
  return ks;
}

std::vector<double> default_k_lattice(const State& prev, const State& next, const Grid& grid) {
  auto [lo0, hi0] = std::ranges::minmax(prev.interior(grid));
  auto [lo1, hi1] = std::ranges::minmax(next.interior(grid));
  return k_lattice(std::min(lo0, lo1) - 0.1, std::max(hi0, hi1) + 0.1, 41);
}

double entropy_residual(const State& prev, const State& next, const ModelSpec& model,
                        const KernelTable& table, const Grid& grid,
                        std::span<const double> k_values, Mode mode, EntropySource source,
                        Backend backend) {
  if (next.n != prev.n + 1 || prev.rho.size() != next.rho.size() ||
      prev.rho.size() != grid.storage_size()) {
    throw Error(ErrorKind::misuse, "entropy_residual needs consecutive states on one grid");
  }
  const long n = grid.n_cells;
  const long gw = grid.ghost_width;
  const double t = prev.t;
  const double lambda = grid.lambda;
  const double* rho = prev.rho.data() + gw;
  const double* rho1 = next.rho.data() + gw;

  std::vector<double> c;
  if (mode == Mode::nonlocal) {
    interface_convolution_into(prev, table, grid, backend, c);
  } else {
    c.resize(static_cast<std::size_t>(n + 1));
    for (long i = -1; i < n; ++i) c[i + 1] = 0.5 * (rho[i] + rho[i + 1]);
  }
  std::vector<double> v(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = model.velocity(c[i]);

  auto cell = [&](long j) {
    const double xl = grid.interface(j - 1);
    const double xr = grid.interface(j);
    double worst = -std::numeric_limits<double>::infinity();
    for (double k : k_values) {
      auto kruzkov = [&](long i, double x) {
        const double hi = numerical_flux(t, x, std::max(rho[i], k), std::max(rho[i + 1], k),
                                         c[i + 1], model, lambda);
        const double lo = numerical_flux(t, x, std::min(rho[i], k), std::min(rho[i + 1], k),
                                         c[i + 1], model, lambda);
        return hi - lo;
      };
      double sl = model.flux(t, xl, k);
      double sr = model.flux(t, xr, k);
      if (source == EntropySource::flux_times_velocity) {
        sl *= v[j];
        sr *= v[j + 1];
      }
      const double lhs = std::abs(rho1[j] - k) - std::abs(rho[j] - k) +
                         lambda * (kruzkov(j, xr) - kruzkov(j - 1, xl)) +
                         lambda * sgn(rho1[j] - k) * (sr - sl);
      worst = std::max(worst, lhs);
    }
    return worst;
  };

  double result = -std::numeric_limits<double>::infinity();
  if (backend == Backend::openmp) {
#pragma omp parallel for reduction(max : result) schedule(static)
    for (long j = 0; j < n; ++j) result = std::max(result, cell(j));
  } else {
    for (long j = 0; j < n; ++j) result = std::max(result, cell(j));
  }
  return result;
}

DiagnosticsRecord make_record(const State& state, const Grid& grid,
                              const TheoreticalConstants& constants,
                              double entropy_residual_value) {
  DiagnosticsRecord r;
  r.t = state.t;
  r.n = state.n;
  r.l1 = l1_norm(state, grid);
  r.linf = linf_norm(state, grid);
  r.tv = total_variation(state, grid);
  r.entropy_residual = entropy_residual_value;
  r.bound_linf = constants.bound_linf(state.t);
  r.bound_tv = constants.bound_tv(state.t);
  return r;
}

}  // namespace nlcl
