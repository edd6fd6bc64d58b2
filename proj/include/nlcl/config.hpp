#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlcl/datum.hpp"
#include "nlcl/model.hpp"
#include "nlcl/scheme.hpp"

namespace nlcl {

/// Everything needed to reproduce one run. Serializes to and from the
/// `[section]` / `key = value` text format.
struct RunConfig {
  std::string name = "run";
  std::string model = "";
  ModelParams params;

  double x_min = 0.0;
  double x_max = 0.0;
  long n_cells = 0;
  std::optional<double> lambda;  // nullopt: 0.9 of the CFL cap
  /// Extra ghost reach, so runs with different kernels can share one grid.
  double ghost_radius = 0.0;

  PiecewiseConstant datum;
  double t_final = 0.0;
  std::vector<double> snapshot_times;
  std::string output_dir = ".";
  Mode mode = Mode::nonlocal;
  bool diagnostics = true;
  long diagnostics_stride = 10;
  bool check_conservation = false;
};

inline constexpr double kAutoLambdaFraction = 0.9;

/// Parses and validates. Throws ErrorKind::parse (with line number) for
/// syntax problems, duplicate or unknown keys; ErrorKind::config, cfl or
/// mesh_condition for invalid content.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

/// Applies a "section.key=value" override to a config's text form.
std::string apply_override(std::string_view text, std::string_view assignment);

/// Canonical text form; parse_config(to_config_text(c)) reproduces c.
std::string to_config_text(const RunConfig& config);

/// Builds the model of a config.
ModelSpec make_model(const RunConfig& config);

/// Resolved lambda (explicit or automatic).
double resolved_lambda(const RunConfig& config, const ModelSpec& model);

/// Checks the CFL and mesh conditions and the datum/far-field consistency.
void validate(const RunConfig& config);

}  // namespace nlcl
