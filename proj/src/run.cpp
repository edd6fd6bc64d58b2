#include "nlcl/run.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>

#include "nlcl/datum.hpp"
#include "nlcl/error.hpp"
#include "nlcl/scheme.hpp"

namespace nlcl {

namespace {

constexpr double kSignTolerance = 1e-12;
constexpr double kConservationTolerance = 1e-12;
constexpr double kBoundSlack = 1e-12;

// Runtime checks of the a-priori properties of the scheme.
class InvariantMonitor {
public:
  InvariantMonitor(const Problem& p, InvariantPolicy policy)
      : p_(p), policy_(policy), l1_0_(l1_norm(p.initial, p.grid)) {
    const PiecewiseConstant& d = p.config.datum;
    nonnegative_ = d.min_value() >= 0.0;
    for (double level : p.model.flat_levels) {
      if (d.max_value() <= level) upper_.push_back(level);
      if (d.min_value() >= level) lower_.push_back(level);
    }
    auto flat = [&](double v) {
      return v == 0.0 || std::ranges::find(p.model.flat_levels, v) != p.model.flat_levels.end();
    };
    conserving_ = nonnegative_ && flat(d.left_far_field()) && flat(d.right_far_field());
    bounds_ = p.config.mode == Mode::nonlocal;
  }

  void every_step(const State& s) {
    if (policy_ == InvariantPolicy::off) return;
    const auto interior = s.interior(p_.grid);
    const auto [lo, hi] = std::ranges::minmax(interior);
    if (nonnegative_ && lo < -kSignTolerance) report("positivity", s, lo);
    for (double level : upper_) {
      if (hi > level + kSignTolerance) report("upper flat level", s, hi);
    }
    for (double level : lower_) {
      if (lo < level - kSignTolerance) report("lower flat level", s, lo);
    }
    if (conserving_) {
      const double l1 = l1_norm(s, p_.grid);
      if (std::abs(l1 - l1_0_) > kConservationTolerance * std::max(l1_0_, 1e-300)) {
        report("L1 conservation", s, l1 - l1_0_);
      }
    }
  }

  void at_record(const DiagnosticsRecord& r, const State& s) {
    if (policy_ == InvariantPolicy::off || !bounds_) return;
    if (r.linf > r.bound_linf * (1.0 + kBoundSlack)) report("Linf growth bound", s, r.linf);
    if (r.tv > r.bound_tv * (1.0 + kBoundSlack)) report("TV bound", s, r.tv);
  }

  void at_snapshot(const Snapshot& snap) {
    if (policy_ == InvariantPolicy::off || !bounds_) return;
    if (previous_) {
      const double dist = l1_distance(previous_->rho, snap.rho, p_.grid.h);
      const double bound = p_.constants.lipschitz(p_.config.t_final) *
                           static_cast<double>(snap.n - previous_->n) * p_.grid.tau;
      if (dist > bound * (1.0 + kBoundSlack)) {
        report_at("time Lipschitz bound", snap.n, snap.t, dist);
      }
    }
    previous_ = snap;
  }

  std::vector<std::string> warnings() const {
    std::vector<std::string> out;
    for (const auto& [name, v] : seen_) {
      out.push_back(v.first + (v.second > 1 ? " (" + std::to_string(v.second) + " occurrences)" : ""));
    }
    return out;
  }

private:
  void report(const std::string& what, const State& s, double value) {
    report_at(what, s.n, s.t, value);
  }

  void report_at(const std::string& what, long n, double t, double value) {
    std::ostringstream os;
    os.precision(17);
    os << "invariant '" << what << "' violated at step " << n << " (t = " << t
       << "), value " << value;
    if (policy_ == InvariantPolicy::strict) throw Error(ErrorKind::invariant_violation, os.str());
    auto [it, inserted] = seen_.try_emplace(what, os.str(), 0);
    ++it->second.second;
  }

  const Problem& p_;
  InvariantPolicy policy_;
  double l1_0_;
  bool nonnegative_ = false;
  bool conserving_ = false;
  bool bounds_ = false;
  std::vector<double> upper_;
  std::vector<double> lower_;
  std::optional<Snapshot> previous_;
  std::map<std::string, std::pair<std::string, long>> seen_;
};

}  // namespace

Problem prepare(const RunConfig& config) {
  validate(config);
  Problem p;
  p.config = config;
  p.model = make_model(config);
  const double lambda = resolved_lambda(config, p.model);
  const double radius =
      std::max(config.mode == Mode::nonlocal ? p.model.kernel.radius() : 0.0, config.ghost_radius);
  p.grid = build_grid(config.x_min, config.x_max, config.n_cells, lambda, radius);
  if (config.mode == Mode::nonlocal) p.table = kernel_cell_averages(p.model.kernel, p.grid);
  p.initial = project_initial_datum(config.datum, p.grid);
  p.constants = theoretical_constants(p.model, l1_norm(p.initial, p.grid),
                                      total_variation(p.initial, p.grid), lambda,
                                      linf_norm(p.initial, p.grid));
  return p;
}

long final_step(double t_final, double tau) { return std::lround(t_final / tau); }

std::vector<std::pair<double, long>> snapshot_steps(const RunConfig& config, double tau) {
  const long last = final_step(config.t_final, tau);
  std::vector<double> times = config.snapshot_times;
  std::ranges::sort(times);
  std::vector<std::pair<double, long>> out;
  for (double t : times) {
    const long n = std::lround(t / tau);
    if (n > last) continue;
    if (!out.empty() && out.back().second == n) continue;
    out.emplace_back(t, n);
  }
  if (out.empty()) out.emplace_back(config.t_final, last);
  return out;
}

Trajectory run(const Problem& p, const RunOptions& options) {
  const Grid& grid = p.grid;
  const RunConfig& cfg = p.config;
  const long last = final_step(cfg.t_final, grid.tau);
  const auto wanted = snapshot_steps(cfg, grid.tau);

  Trajectory traj;
  InvariantMonitor monitor(p, options.invariants);
  Stepper stepper(p.model, p.table, grid, cfg.mode, options.backend);

  State current = p.initial;
  State next;
  std::size_t snap = 0;

  auto visit = [&](const State& s, const State* prev) {
    if (options.observer) options.observer(s);
    monitor.every_step(s);
    const bool record = cfg.diagnostics && (s.n % cfg.diagnostics_stride == 0 || s.n == last);
    if (record) {
      double residual = 0.0;
      if (prev != nullptr) {
        const auto ks = default_k_lattice(*prev, s, grid);
        residual = entropy_residual(*prev, s, p.model, p.table, grid, ks, cfg.mode,
                                    EntropySource::flux_times_velocity, options.backend);
      }
      traj.diagnostics.records.push_back(make_record(s, grid, p.constants, residual));
      monitor.at_record(traj.diagnostics.records.back(), s);
    }
    while (snap < wanted.size() && wanted[snap].second == s.n) {
      const auto interior = s.interior(grid);
      Snapshot shot{wanted[snap].first, s.t, s.n, {interior.begin(), interior.end()}};
      monitor.at_snapshot(shot);
      traj.snapshots.push_back(std::move(shot));
      ++snap;
    }
  };

  visit(current, nullptr);
  for (long n = 0; n < last; ++n) {
    stepper.step_into(current, next);
    visit(next, &current);
    std::swap(current, next);
  }
  traj.warnings = monitor.warnings();
  return traj;
}

Trajectory run(const RunConfig& config, const RunOptions& options) {
  return run(prepare(config), options);
}

}  // namespace nlcl
