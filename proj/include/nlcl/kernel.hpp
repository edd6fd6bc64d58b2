#pragma once

#include <vector>

namespace nlcl {

struct Grid;

/// Normalized bump kernel alpha ((x-a)(b-x))^{5/2} on [a,b].
struct KernelSpec {
  double a = 0.0;
  double b = 0.0;
  double alpha = 0.0;
  double norm_deta = 0.0;   // sup |eta'|
  double norm_d2eta = 0.0;  // sup |eta''|

  double operator()(double x) const;
  double derivative(double x) const;
  double second_derivative(double x) const;
  double radius() const;
};

/// Computes alpha by adaptive quadrature and the derivative norms by dense
/// sampling. Throws ErrorKind::invalid_kernel when b <= a.
KernelSpec normalize_kernel(double a, double b);

/// Cell averages eta_m = (1/h) int_{(m-1/2)h}^{(m+1/2)h} eta, for the offsets
/// m_min..m_max whose cell meets the support.
struct KernelTable {
  long m_min = 0;
  long m_max = -1;
  double h = 0.0;
  std::vector<double> weights;  // eta_m, index m - m_min

  double weight(long m) const {
    return (m < m_min || m > m_max) ? 0.0 : weights[static_cast<std::size_t>(m - m_min)];
  }
  long size() const { return m_max - m_min + 1; }
};

KernelTable kernel_cell_averages(const KernelSpec& kernel, const Grid& grid);

}  // namespace nlcl
