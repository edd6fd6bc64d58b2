#include "nlcl/experiments.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>

#include "nlcl/csv.hpp"
#include "nlcl/error.hpp"

namespace nlcl {

namespace {

constexpr double kLimitTime = 0.5;

const char* const kTrafficDatum = "-2.8:-1.8:0.5, -1.2:-0.2:0.75, 0.6:1.0:0.75, 1.5:inf:1";
const char* const kTvDatum = "-1.35:-0.95:0.25, -0.85:-0.25:1, -0.15:0.25:0.75";
const char* const kLimitDatum = "-1.8:-1.3:0.75, -1.3:-0.8:1";

std::string join(const std::string& dir, const std::string& file) {
  return (std::filesystem::path(dir) / file).string();
}

std::string time_tag(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", t);
  return buf;
}

std::string snapshot_file(const std::string& name, double t) {
  return name + "_t" + time_tag(t) + ".csv";
}

// Recipes go through the text form so that they are exactly what a config
// file with the same content would produce.
RunConfig finalize(const RunConfig& recipe, const ExperimentOptions& options) {
  RunConfig c = recipe;
  c.output_dir = options.out_dir;
  std::string text = to_config_text(c);
  for (const auto& o : options.overrides) text = apply_override(text, o);
  return parse_config(text);
}

ExperimentResult write_outputs(const RunConfig& config, const Grid& grid, const Trajectory& traj) {
  ExperimentResult result;
  const std::string cfg = join(config.output_dir, config.name + ".cfg");
  write_file(cfg, to_config_text(config));
  result.files.push_back(cfg);
  for (const Snapshot& s : traj.snapshots) {
    const std::string path = join(config.output_dir, snapshot_file(config.name, s.t_requested));
    write_csv(s, grid, path);
    result.files.push_back(path);
  }
  if (config.diagnostics) {
    const std::string path = join(config.output_dir, config.name + "_series.csv");
    write_csv(traj.diagnostics, path);
    result.files.push_back(path);
  }
  for (const auto& w : traj.warnings) result.warnings.push_back(config.name + ": " + w);
  return result;
}

void append(ExperimentResult& into, const ExperimentResult& from) {
  into.files.insert(into.files.end(), from.files.begin(), from.files.end());
  into.warnings.insert(into.warnings.end(), from.warnings.begin(), from.warnings.end());
}

// One panel per (run, time), runs as rows.
std::string panel_script(const std::string& title, const std::vector<RunConfig>& rows,
                         const std::vector<double>& times) {
  std::string s = "# " + title + "\nset datafile separator ','\nset key off\n";
  s += "set multiplot layout " + std::to_string(rows.size()) + "," +
       std::to_string(times.size()) + "\n";
  for (const RunConfig& r : rows) {
    for (double t : times) {
      s += "set title '" + r.name + " t=" + time_tag(t) + "'\n";
      s += "plot '" + snapshot_file(r.name, t) + "' using 1:2 with lines\n";
    }
  }
  s += "unset multiplot\n";
  return s;
}

std::string write_script(const std::string& dir, const std::string& file, const std::string& body) {
  const std::string path = join(dir, file);
  write_file(path, body);
  return path;
}

RunConfig base(const std::string& model, const std::string& name, const char* datum) {
  RunConfig c;
  c.model = model;
  c.name = name;
  c.datum = parse_pieces(datum);
  c.lambda.reset();
  return c;
}

}  // namespace

ExperimentResult run_and_write(const RunConfig& config, const RunOptions& options) {
  const Problem problem = prepare(config);
  const Trajectory traj = run(problem, options);
  return write_outputs(config, problem.grid, traj);
}

std::vector<RunConfig> traffic_configs(const ExperimentOptions& options) {
  std::vector<RunConfig> out;
  for (const char* model : {"traffic_backward", "traffic_forward"}) {
    RunConfig c = base(model, model, kTrafficDatum);
    c.params.v_max = 1.0;
    c.x_min = -16.0;
    c.x_max = 16.0;
    c.n_cells = 1600;
    c.t_final = 10.0;
    c.snapshot_times = {0.05, 2.50, 5.01, 7.50, 10.00};
    c.diagnostics_stride = 10;
    c.check_conservation = true;
    out.push_back(finalize(c, options));
  }
  return out;
}

std::vector<RunConfig> tv_configs(const ExperimentOptions& options) {
  struct Case {
    const char* name;
    double a, b;
  };
  std::vector<RunConfig> out;
  for (const Case& k : {Case{"tv_right", 0.0, 0.2}, Case{"tv_centered", -0.1, 0.1},
                        Case{"tv_left", -0.2, 0.0}}) {
    RunConfig c = base("tv_example", k.name, kTvDatum);
    c.params.a = k.a;
    c.params.b = k.b;
    c.x_min = -4.0;
    c.x_max = 4.0;
    c.n_cells = 1600;
    c.t_final = 1.0;
    c.snapshot_times = {0.0, 0.25, 0.50, 0.75, 1.00};
    c.diagnostics_stride = 10;
    c.check_conservation = true;
    out.push_back(finalize(c, options));
  }
  return out;
}

std::vector<double> limit_inverse_widths() {
  return {4, 5, 6, 7, 8, 9, 10, 20, 40, 60, 80, 100, 150, 200, 250};
}

std::vector<RunConfig> limit_configs(const ExperimentOptions& options) {
  const std::vector<double> panel = {4, 10, 20};  // a = 0.25, 0.1, 0.05
  const std::vector<double> panel_times = {0.5, 1.0, 1.5, 2.0};
  std::vector<RunConfig> out;
  auto configure = [&](RunConfig c, bool full) {
    c.x_min = -4.0;
    c.x_max = 4.0;
    c.n_cells = 3200;
    c.ghost_radius = 0.25;
    c.t_final = full ? 2.0 : kLimitTime;
    c.snapshot_times = full ? panel_times : std::vector<double>{kLimitTime};
    c.diagnostics_stride = 100;
    c.check_conservation = true;
    return finalize(c, options);
  };
  for (double inv : limit_inverse_widths()) {
    char name[32];
    std::snprintf(name, sizeof name, "limit_inv_a_%g", inv);
    RunConfig c = base("limit_family", name, kLimitDatum);
    c.params.width = 1.0 / inv;
    out.push_back(configure(c, std::ranges::find(panel, inv) != panel.end()));
  }
  RunConfig local = base("limit_family", "limit_local", kLimitDatum);
  local.mode = Mode::local;
  out.push_back(configure(local, true));
  return out;
}

ExperimentResult experiment_traffic(const ExperimentOptions& options) {
  const auto configs = traffic_configs(options);
  ExperimentResult result;
  RunOptions run_options;
  run_options.invariants = options.invariants;
  for (const RunConfig& c : configs) append(result, run_and_write(c, run_options));
  result.files.push_back(write_script(options.out_dir, "fig_traffic.gp",
                                      panel_script("traffic: backward (top), forward (bottom)",
                                                   configs, configs.front().snapshot_times)));
  return result;
}

ExperimentResult experiment_tv(const ExperimentOptions& options) {
  const auto configs = tv_configs(options);
  ExperimentResult result;
  RunOptions run_options;
  run_options.invariants = options.invariants;
  for (const RunConfig& c : configs) append(result, run_and_write(c, run_options));
  result.files.push_back(write_script(options.out_dir, "fig_tv1.gp",
                                      panel_script("tv_right snapshots", {configs.front()},
                                                   configs.front().snapshot_times)));
  std::string tv = "# total variation versus time\nset datafile separator ','\n"
                   "set xlabel 't'\nset ylabel 'TV'\nset multiplot layout 1," +
                   std::to_string(configs.size()) + "\n";
  for (const RunConfig& c : configs) {
    tv += "set title '" + c.name + "'\nplot '" + c.name +
          "_series.csv' using 1:4 with lines notitle\n";
  }
  tv += "unset multiplot\n";
  result.files.push_back(write_script(options.out_dir, "fig_tv2.gp", tv));
  return result;
}

std::vector<LimitRow> limit_table(const std::vector<RunConfig>& configs,
                                  const std::vector<Trajectory>& trajectories) {
  auto at_limit_time = [](const Trajectory& t) -> const Snapshot& {
    for (const Snapshot& s : t.snapshots) {
      if (s.t_requested == kLimitTime) return s;
    }
    throw Error(ErrorKind::misuse, "limit run lacks a snapshot at t = 0.5");
  };
  const Snapshot* local = nullptr;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    if (configs[i].mode == Mode::local) local = &at_limit_time(trajectories[i]);
  }
  if (local == nullptr) throw Error(ErrorKind::misuse, "limit sweep lacks the local run");

  std::vector<LimitRow> rows;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const RunConfig& c = configs[i];
    if (c.mode == Mode::local) continue;
    const Snapshot& s = at_limit_time(trajectories[i]);
    if (s.n != local->n) throw Error(ErrorKind::misuse, "limit runs disagree on the time step");
    const double h = (c.x_max - c.x_min) / static_cast<double>(c.n_cells);
    rows.push_back({1.0 / c.params.width, c.params.width, l1_distance(s.rho, local->rho, h)});
  }
  return rows;
}

ExperimentResult experiment_limit(const ExperimentOptions& options) {
  const auto configs = limit_configs(options);
  std::vector<Problem> problems(configs.size());
  std::vector<Trajectory> trajectories(configs.size());
  std::vector<std::exception_ptr> errors(configs.size());
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
  const long count = static_cast<long>(configs.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long i = 0; i < count; ++i) {
    try {
      RunOptions run_options;
      run_options.backend = Backend::serial;
      run_options.invariants = options.invariants;
      problems[i] = prepare(configs[i]);
      trajectories[i] = run(problems[i], run_options);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ExperimentResult result;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    append(result, write_outputs(configs[i], problems[i].grid, trajectories[i]));
  }

  std::string table = "inv_a,a,l1_distance\n";
  for (const LimitRow& r : limit_table(configs, trajectories)) {
    table += format_real(r.inverse_width) + "," + format_real(r.width) + "," +
             format_real(r.distance) + "\n";
  }
  const std::string table_path = join(options.out_dir, "limit_table.csv");
  write_file(table_path, table);
  result.files.push_back(table_path);

  std::vector<RunConfig> rows;
  for (const RunConfig& c : configs) {
    if (c.t_final > kLimitTime) rows.push_back(c);
  }
  result.files.push_back(write_script(options.out_dir, "fig_all.gp",
                                      panel_script("nonlocal (a = 1/4, 1/10, 1/20) and local",
                                                   rows, rows.front().snapshot_times)));
  result.files.push_back(write_script(
      options.out_dir, "fig_convergence.gp",
      "# L1 distance to the local solution at t = 0.5\nset datafile separator ','\n"
      "set xlabel '1/a'\nset ylabel 'L1 distance'\nset key off\n"
      "plot 'limit_table.csv' every ::1 using 1:3 with linespoints\n"));
  return result;
}

}  // namespace nlcl
