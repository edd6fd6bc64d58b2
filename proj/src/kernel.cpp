#include "nlcl/kernel.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "nlcl/error.hpp"
#include "nlcl/grid.hpp"

namespace nlcl {

namespace {

constexpr int kNormSamples = 10000;
constexpr double kQuadratureTolerance = 1e-13;
constexpr unsigned kQuadratureDepth = 8;

double bump(double x, double a, double b) {
  if (x <= a || x >= b) return 0.0;
  const double g = (x - a) * (b - x);
  return g * g * std::sqrt(g);
}

double integrate(const auto& f, double lo, double hi) {
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 15>::integrate(f, lo, hi, kQuadratureDepth, kQuadratureTolerance);
}

}  // namespace

double KernelSpec::operator()(double x) const { return alpha * bump(x, a, b); }

double KernelSpec::derivative(double x) const {
  if (x <= a || x >= b) return 0.0;
  const double g = (x - a) * (b - x);
  const double dg = a + b - 2.0 * x;
  return alpha * 2.5 * g * std::sqrt(g) * dg;
}

double KernelSpec::second_derivative(double x) const {
  if (x <= a || x >= b) return 0.0;
  const double g = (x - a) * (b - x);
  const double dg = a + b - 2.0 * x;
  const double root = std::sqrt(g);
  return alpha * (3.75 * root * dg * dg - 5.0 * g * root);
}

double KernelSpec::radius() const { return std::max(std::abs(a), std::abs(b)); }

KernelSpec normalize_kernel(double a, double b) {
  if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorKind::invalid_kernel, "kernel support requires a < b");
  }
  KernelSpec k;
  k.a = a;
  k.b = b;
  const double mass = integrate([&](double x) { return bump(x, a, b); }, a, b);
  k.alpha = 1.0 / mass;
  for (int i = 0; i <= kNormSamples; ++i) {
    const double x = a + (b - a) * static_cast<double>(i) / kNormSamples;
    k.norm_deta = std::max(k.norm_deta, std::abs(k.derivative(x)));
    k.norm_d2eta = std::max(k.norm_d2eta, std::abs(k.second_derivative(x)));
  }
  return k;
}

KernelTable kernel_cell_averages(const KernelSpec& kernel, const Grid& grid) {
  KernelTable table;
  const double h = grid.h;
  table.h = h;
  table.m_min = static_cast<long>(std::floor(kernel.a / h - 0.5)) + 1;
  table.m_max = static_cast<long>(std::ceil(kernel.b / h + 0.5)) - 1;
  table.weights.assign(static_cast<std::size_t>(table.size()), 0.0);
  for (long m = table.m_min; m <= table.m_max; ++m) {
    const double lo = std::max(kernel.a, (static_cast<double>(m) - 0.5) * h);
    const double hi = std::min(kernel.b, (static_cast<double>(m) + 0.5) * h);
    if (!(hi > lo)) continue;
    const double mass = integrate([&](double x) { return kernel(x); }, lo, hi);
    table.weights[static_cast<std::size_t>(m - table.m_min)] = mass / h;
  }
  return table;
}

}  // namespace nlcl
