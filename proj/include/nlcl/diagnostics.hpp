#pragma once

#include <span>
#include <vector>

#include "nlcl/backend.hpp"
#include "nlcl/grid.hpp"
#include "nlcl/kernel.hpp"
#include "nlcl/model.hpp"
#include "nlcl/scheme.hpp"
#include "nlcl/state.hpp"

namespace nlcl {

struct DiagnosticsRecord {
  double t = 0.0;
  long n = 0;
  double l1 = 0.0;
  double linf = 0.0;
  double tv = 0.0;
  double entropy_residual = 0.0;
  double bound_linf = 0.0;
  double bound_tv = 0.0;
};

struct DiagnosticsSeries {
  std::vector<DiagnosticsRecord> records;
};

/// The constants of the a-priori estimates, evaluated from model metadata
/// and the norms of the initial datum.
struct TheoreticalConstants {
  double L = 0.0;
  double K1 = 0.0;
  double K2 = 0.0;
  double lambda_star = 0.0;

  double lambda = 0.0;
  double datum_l1 = 0.0;
  double datum_linf = 0.0;
  double datum_tv = 0.0;
  // Cached pieces of the Lipschitz constant.
  double c_const = 0.0;
  double c_tv_factor = 0.0;

  /// Growth bound |rho(t)|_inf <= |rho0|_inf e^{L t}.
  double bound_linf(double t) const;
  /// TV(t) <= (K2 t + TV0) e^{K1 t}.
  double bound_tv(double t) const;
  /// Lipschitz-in-time constant; grows exponentially with T.
  double lipschitz(double T) const;
};

TheoreticalConstants theoretical_constants(const ModelSpec& model, double datum_l1,
                                           double datum_tv, double lambda,
                                           double datum_linf = 0.0);

/// sum_j h |rho_j| over interior cells.
double l1_norm(const State& state, const Grid& grid);
double linf_norm(const State& state, const Grid& grid);
/// Interior neighbour jumps plus the jumps to the first ghost cell on each side.
double total_variation(const State& state, const Grid& grid);
/// sum_j h |a_j - b_j| over interior cells. Throws ErrorKind::misuse on size mismatch.
double l1_distance(const State& a, const State& b, const Grid& grid);
double l1_distance(std::span<const double> a, std::span<const double> b, double h);

/// Source term convention in the cell entropy inequality. The default pairs
/// f(k) with the discrete velocity v(c_{j+1/2}), which is what the scheme's
/// Kruzkov flux differences actually telescope against; flux_only drops the
/// velocity factor.
enum class EntropySource { flux_times_velocity, flux_only };

/// Max over interior cells and k of the cell entropy inequality left-hand side
///   |rho'_j - k| - |rho_j - k| + lambda (F^k_{j+1/2} - F^k_{j-1/2})
///     + lambda sgn(rho'_j - k) (S^k_{j+1/2} - S^k_{j-1/2}),
/// with F^k the Kruzkov numerical entropy flux. Throws ErrorKind::misuse when
/// `next` is not the step after `prev`.
double entropy_residual(const State& prev, const State& next, const ModelSpec& model,
                        const KernelTable& table, const Grid& grid,
                        std::span<const double> k_values, Mode mode = Mode::nonlocal,
                        EntropySource source = EntropySource::flux_times_velocity,
                        Backend backend = Backend::openmp);

/// count uniform values on [lo, hi].
std::vector<double> k_lattice(double lo, double hi, int count);
/// Default lattice: 41 values spanning the range of both states widened by 0.1.
std::vector<double> default_k_lattice(const State& prev, const State& next, const Grid& grid);

DiagnosticsRecord make_record(const State& state, const Grid& grid,
                              const TheoreticalConstants& constants,
                              double entropy_residual_value);

}  // namespace nlcl
