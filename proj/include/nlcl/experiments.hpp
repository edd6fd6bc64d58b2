#pragma once

#include <string>
#include <vector>

#include "nlcl/config.hpp"
#include "nlcl/run.hpp"

namespace nlcl {

struct ExperimentOptions {
  std::string out_dir = "out";
  std::vector<std::string> overrides;  // "section.key=value", applied to every run
  int threads = 0;                     // 0: OpenMP default
  InvariantPolicy invariants = InvariantPolicy::warn;
};

/// Files written by a run or an experiment, relative paths included.
struct ExperimentResult {
  std::vector<std::string> files;
  std::vector<std::string> warnings;
};

/// Writes the snapshot and series CSVs of one configured run under
/// config.output_dir, named after config.name.
ExperimentResult run_and_write(const RunConfig& config, const RunOptions& options);

// Recipes. Each one is a list of plain configs plus output naming.
std::vector<RunConfig> traffic_configs(const ExperimentOptions& options);
std::vector<RunConfig> tv_configs(const ExperimentOptions& options);
/// Sweep widths of the limit study (1/a = 4 .. 250).
std::vector<double> limit_inverse_widths();
std::vector<RunConfig> limit_configs(const ExperimentOptions& options);

ExperimentResult experiment_traffic(const ExperimentOptions& options);
ExperimentResult experiment_tv(const ExperimentOptions& options);

struct LimitRow {
  double inverse_width = 0.0;
  double width = 0.0;
  double distance = 0.0;
};

/// L1 distance at t = 0.5 between each nonlocal run and the local run.
std::vector<LimitRow> limit_table(const std::vector<RunConfig>& configs,
                                  const std::vector<Trajectory>& trajectories);
ExperimentResult experiment_limit(const ExperimentOptions& options);

}  // namespace nlcl
