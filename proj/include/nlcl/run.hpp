#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nlcl/backend.hpp"
#include "nlcl/config.hpp"
#include "nlcl/diagnostics.hpp"
#include "nlcl/grid.hpp"
#include "nlcl/kernel.hpp"
#include "nlcl/model.hpp"
#include "nlcl/state.hpp"

namespace nlcl {

/// A validated config with its model, grid and kernel table built.
struct Problem {
  RunConfig config;
  ModelSpec model;
  Grid grid;
  KernelTable table;
  TheoreticalConstants constants;
  State initial;
};

Problem prepare(const RunConfig& config);

struct Snapshot {
  double t_requested = 0.0;
  double t = 0.0;
  long n = 0;
  std::vector<double> rho;  // interior cells
};

struct Trajectory {
  std::vector<Snapshot> snapshots;
  DiagnosticsSeries diagnostics;
  std::vector<std::string> warnings;
};

enum class InvariantPolicy { off, warn, strict };

struct RunOptions {
  Backend backend = Backend::openmp;
  InvariantPolicy invariants = InvariantPolicy::warn;
  /// Called with every state, starting from the projected datum.
  std::function<void(const State&)> observer;
};

/// Steps of the snapshot grid: times rounded to the nearest step, those past
/// t_final dropped, duplicates merged. Never empty.
std::vector<std::pair<double, long>> snapshot_steps(const RunConfig& config, double tau);
long final_step(double t_final, double tau);

/// Drives the scheme to t_final. Deterministic: identical configs give
/// bit-identical trajectories.
Trajectory run(const Problem& problem, const RunOptions& options = {});
Trajectory run(const RunConfig& config, const RunOptions& options = {});

}  // namespace nlcl
