#include "nlcl/convolution.hpp"

#include <algorithm>
#include <string>

#include "nlcl/error.hpp"

namespace nlcl {

namespace {

constexpr long kBlock = 512;

// out[i + 1] = sum_m w_m rbar[i - m + g] for interfaces i in [lo, hi). The sum
// runs over m in ascending order for every element, whatever the blocking.
inline void convolve_block(const double* rbar, const double* w, long m_min, long m_max, long g,
                           long lo, long hi, double* out) {
  for (long i = lo; i < hi; ++i) out[i + 1] = 0.0;
  for (long m = m_min; m <= m_max; ++m) {
    const double wm = w[m - m_min];
    const double* src = rbar - m + g;
    for (long i = lo; i < hi; ++i) out[i + 1] += wm * src[i];
  }
}

}  // namespace

void interface_convolution_into(const State& state, const KernelTable& table, const Grid& grid,
                                Backend backend, std::vector<double>& out) {
  const long n = grid.n_cells;
  const long g = grid.ghost_width;
  if (state.rho.size() != grid.storage_size()) {
    throw Error(ErrorKind::misuse, "state size does not match grid");
  }
  if (table.size() > 0 && (g < 1 + table.m_max || g < 1 - table.m_min)) {
    throw Error(ErrorKind::window_underflow,
                "ghost width " + std::to_string(g) + " does not cover kernel offsets [" +
                    std::to_string(table.m_min) + ", " + std::to_string(table.m_max) + "]");
  }

  const long size = static_cast<long>(state.rho.size());
  std::vector<double> rbar(static_cast<std::size_t>(size - 1));
  for (long s = 0; s + 1 < size; ++s) rbar[s] = 0.5 * (state.rho[s] + state.rho[s + 1]);

  std::vector<double> w(table.weights);
  for (double& x : w) x *= table.h;

  out.assign(static_cast<std::size_t>(n + 1), 0.0);
  const double* rb = rbar.data();
  const double* wp = w.data();
  const long m_min = table.m_min;
  const long m_max = table.m_max;
  double* o = out.data();

  const long blocks = (n + 1 + kBlock - 1) / kBlock;
  auto block = [&](long b) {
    const long lo = -1 + b * kBlock;
    convolve_block(rb, wp, m_min, m_max, g, lo, std::min(lo + kBlock, n), o);
  };
  if (backend == Backend::openmp) {
#pragma omp parallel for schedule(static)
    for (long b = 0; b < blocks; ++b) block(b);
  } else {
    for (long b = 0; b < blocks; ++b) block(b);
  }
}

ConvolutionField interface_convolution(const State& state, const KernelTable& table,
                                       const Grid& grid, Backend backend) {
  ConvolutionField field;
  field.time_index = state.n;
  interface_convolution_into(state, table, grid, backend, field.values);
  return field;
}

}  // namespace nlcl
