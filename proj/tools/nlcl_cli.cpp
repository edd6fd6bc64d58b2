// Command-line driver: `nlcl run <config>` and `nlcl experiment traffic|tv|limit`.

#include <omp.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nlcl/config.hpp"
#include "nlcl/error.hpp"
#include "nlcl/experiments.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kConfigError = 2,
  kCflRejected = 3,
  kBlowup = 4,
  kInvariantViolated = 5,
  kIoError = 6,
};

int exit_code(nlcl::ErrorKind kind) {
  using nlcl::ErrorKind;
  switch (kind) {
    case ErrorKind::cfl:
    case ErrorKind::mesh_condition: return kCflRejected;
    case ErrorKind::numerical_blowup: return kBlowup;
    case ErrorKind::invariant_violation: return kInvariantViolated;
    case ErrorKind::io: return kIoError;
    case ErrorKind::invalid_geometry:
    case ErrorKind::invalid_kernel:
    case ErrorKind::invalid_datum:
    case ErrorKind::registry:
    case ErrorKind::parse:
    case ErrorKind::config: return kConfigError;
    default: return kFailure;
  }
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw nlcl::Error(nlcl::ErrorKind::io, "cannot read config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void report(const nlcl::ExperimentResult& result) {
  for (const auto& f : result.files) std::cout << "wrote " << f << "\n";
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-volume solver for scalar conservation laws with nonlocal flux"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_dir;
  int threads = 0;
  bool strict = false;
  std::vector<std::string> overrides;
  app.add_option("--out", out_dir, "Output directory (overrides run.output_dir)");
  app.add_option("--threads", threads, "OpenMP threads")->check(CLI::NonNegativeNumber);
  app.add_flag("--strict-invariants", strict, "Abort on any invariant violation");

  auto* run_cmd = app.add_subcommand("run", "Run a configuration file");
  std::string config_path;
  run_cmd->add_option("config", config_path, "Configuration file")->required();
  run_cmd->add_option("--override", overrides, "section.key=value");

  auto* exp_cmd = app.add_subcommand("experiment", "Run a named experiment recipe");
  std::string experiment;
  exp_cmd->add_option("name", experiment, "traffic, tv or limit")
      ->required()
      ->check(CLI::IsMember({"traffic", "tv", "limit"}));
  exp_cmd->add_option("--override", overrides, "section.key=value");

  CLI11_PARSE(app, argc, argv);

  if (threads > 0) omp_set_num_threads(threads);
  const auto policy = strict ? nlcl::InvariantPolicy::strict : nlcl::InvariantPolicy::warn;

  try {
    if (*run_cmd) {
      std::string text = read_text(config_path);
      if (!out_dir.empty()) text = nlcl::apply_override(text, "run.output_dir=" + out_dir);
      for (const auto& o : overrides) text = nlcl::apply_override(text, o);
      const nlcl::RunConfig config = nlcl::parse_config(text);
      nlcl::RunOptions options;
      options.invariants = policy;
      report(nlcl::run_and_write(config, options));
    } else {
      nlcl::ExperimentOptions options;
      options.out_dir = out_dir.empty() ? "out" : out_dir;
      options.overrides = overrides;
      options.threads = threads;
      options.invariants = policy;
      if (experiment == "traffic") report(nlcl::experiment_traffic(options));
      else if (experiment == "tv") report(nlcl::experiment_tv(options));
      else report(nlcl::experiment_limit(options));
    }
  } catch (const nlcl::Error& e) {
    std::cerr << "error (" << nlcl::to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}
