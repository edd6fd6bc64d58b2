#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "nlcl/diagnostics.hpp"
#include "nlcl/run.hpp"

using namespace nlcl;

namespace {

RunConfig traffic_config(long n, double t_final) {
  RunConfig c;
  c.name = "traffic";
  c.model = "traffic_forward";
  c.x_min = -16.0;
  c.x_max = 16.0;
  c.n_cells = n;
  c.datum = parse_pieces(fixture::kTrafficDatum);
  c.t_final = t_final;
  c.snapshot_times = {0.05, 0.5, t_final};
  c.check_conservation = true;
  return c;
}

RunConfig tv_config(long n, double t_final) {
  RunConfig c;
  c.name = "tv";
  c.model = "tv_example";
  c.params.a = 0.0;
  c.params.b = 0.2;
  c.x_min = -4.0;
  c.x_max = 4.0;
  c.n_cells = n;
  c.datum = parse_pieces(fixture::kTvDatum);
  c.t_final = t_final;
  c.snapshot_times = {0.0, 0.25, 0.5, 0.75, 1.0};
  return c;
}

}  // namespace

TEST_CASE("t_final = 0 yields the projected datum only") {
  RunConfig c = traffic_config(400, 0.0);
  const Problem p = prepare(c);
  const Trajectory tr = run(p);
  REQUIRE(tr.snapshots.size() == 1);
  CHECK(tr.snapshots[0].n == 0);
  CHECK(tr.snapshots[0].t == 0.0);
  const auto interior = p.initial.interior(p.grid);
  CHECK(std::equal(interior.begin(), interior.end(), tr.snapshots[0].rho.begin(),
                   tr.snapshots[0].rho.end()));
  REQUIRE(tr.diagnostics.records.size() == 1);
  CHECK(tr.diagnostics.records[0].entropy_residual == 0.0);
}

TEST_CASE("snapshot times round to the nearest step") {
  RunConfig c = traffic_config(400, 1.0);
  c.snapshot_times = {0.0, 0.0126, 0.5, 0.5, 0.50001, 2.0};
  const auto steps = snapshot_steps(c, 0.004);
  REQUIRE(steps.size() == 3);
  CHECK(steps[0].second == 0);
  CHECK(steps[1].second == 3);
  CHECK(steps[2].second == 125);
  c.snapshot_times = {5.0};
  const auto fallback = snapshot_steps(c, 0.004);
  REQUIRE(fallback.size() == 1);
  CHECK(fallback[0].second == 250);
  CHECK(final_step(1.0, 0.004) == 250);
}

TEST_CASE("snapshot times strictly increase and record the actual time") {
  const Trajectory tr = run(traffic_config(400, 1.0));
  REQUIRE(tr.snapshots.size() == 3);
  for (std::size_t i = 1; i < tr.snapshots.size(); ++i)
    CHECK(tr.snapshots[i].t > tr.snapshots[i - 1].t);
  for (const auto& s : tr.snapshots) CHECK(std::abs(s.t - s.t_requested) <= 0.5 * 0.05 * 0.08 + 1e-12);
  for (std::size_t i = 1; i < tr.diagnostics.records.size(); ++i)
    CHECK(tr.diagnostics.records[i].t > tr.diagnostics.records[i - 1].t);
}

TEST_CASE("traffic stays in [0,1] and raises no invariant warnings") {
  RunOptions opts;
  opts.invariants = InvariantPolicy::strict;
  const Trajectory tr = run(traffic_config(400, 2.0), opts);
  CHECK(tr.warnings.empty());
  for (const auto& s : tr.snapshots)
    for (double v : s.rho) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
}

TEST_CASE("tv example exceeds one") {
  const Trajectory tr = run(tv_config(400, 1.0));
  double peak = 0.0;
  for (const auto& s : tr.snapshots) peak = std::max(peak, *std::max_element(s.rho.begin(), s.rho.end()));
  CHECK(peak > 1.0);
}

TEST_CASE("runs are deterministic") {
  const RunConfig c = traffic_config(400, 1.0);
  const Trajectory a = run(c);
  RunOptions serial;
  serial.backend = Backend::serial;
  const Trajectory b = run(c, serial);
  REQUIRE(a.snapshots.size() == b.snapshots.size());
  for (std::size_t i = 0; i < a.snapshots.size(); ++i) CHECK(a.snapshots[i].rho == b.snapshots[i].rho);
  REQUIRE(a.diagnostics.records.size() == b.diagnostics.records.size());
  for (std::size_t i = 0; i < a.diagnostics.records.size(); ++i) {
    CHECK(a.diagnostics.records[i].l1 == b.diagnostics.records[i].l1);
    CHECK(a.diagnostics.records[i].tv == b.diagnostics.records[i].tv);
    CHECK(a.diagnostics.records[i].entropy_residual == b.diagnostics.records[i].entropy_residual);
  }
}

TEST_CASE("observer sees every state") {
  const RunConfig c = traffic_config(200, 0.5);
  const Problem p = prepare(c);
  long count = 0;
  long last = -1;
  RunOptions opts;
  opts.observer = [&](const State& s) {
    CHECK(s.n == last + 1);
    last = s.n;
    ++count;
  };
  run(p, opts);
  CHECK(count == final_step(c.t_final, p.grid.tau) + 1);
}

TEST_CASE("diagnostics recomputed from snapshots reproduce the series") {
  RunConfig c = tv_config(400, 1.0);
  c.diagnostics_stride = 1;
  const Problem p = prepare(c);
  const Trajectory tr = run(p);
  for (const auto& snap : tr.snapshots) {
    const auto rec = std::find_if(tr.diagnostics.records.begin(), tr.diagnostics.records.end(),
                                  [&](const DiagnosticsRecord& r) { return r.n == snap.n; });
    REQUIRE(rec != tr.diagnostics.records.end());
    State s;
    s.rho.assign(p.grid.storage_size(), 0.0);
    std::copy(snap.rho.begin(), snap.rho.end(), s.rho.begin() + p.grid.ghost_width);
    refresh_ghosts(s, p.grid);
    s.t = snap.t;
    s.n = snap.n;
    const DiagnosticsRecord again = make_record(s, p.grid, p.constants, rec->entropy_residual);
    CHECK(again.l1 == rec->l1);
    CHECK(again.linf == rec->linf);
    CHECK(again.tv == rec->tv);
    CHECK(again.bound_linf == rec->bound_linf);
    CHECK(again.bound_tv == rec->bound_tv);
  }
}
