#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "fixtures.hpp"
#include "nlcl/convolution.hpp"
#include "nlcl/diagnostics.hpp"
#include "nlcl/error.hpp"
#include "nlcl/scheme.hpp"

using namespace nlcl;

namespace {

// Direct transcription of the update, one cell at a time.
State brute_force_step(const State& s, const ModelSpec& model, const KernelTable& table,
                       const Grid& g) {
  auto conv = [&](long j) {
    double c = 0.0;
    for (long m = table.m_min; m <= table.m_max; ++m)
      c += g.h * table.weight(m) * 0.5 * (s.at(g, j - m) + s.at(g, j - m + 1));
    return c;
  };
  auto flux = [&](long j) {
    const double x = g.interface(j);
    const double rl = s.at(g, j);
    const double rr = s.at(g, j + 1);
    return 0.5 * (model.flux(s.t, x, rl) + model.flux(s.t, x, rr)) * model.velocity(conv(j)) -
           (rr - rl) / (6.0 * g.lambda);
  };
  State next = s;
  for (long j = 0; j < g.n_cells; ++j)
    next.at(g, j) = s.at(g, j) - g.lambda * (flux(j) - flux(j - 1));
  next.n = s.n + 1;
  refresh_ghosts(next, g);
  return next;
}

ModelSpec with_model(const char* name, double a, double b) {
  ModelParams p;
  p.a = a;
  p.b = b;
  return builtin_model(name, p);
}

}  // namespace

TEST_CASE("numerical flux examples") {
  ModelSpec unit = builtin_model("tv_example");
  unit.velocity = [](double) { return 1.0; };
  for (double r : {0.0, 0.3, 1.7}) CHECK(numerical_flux(0, 0, r, r, 0.4, unit, 0.05) == r);

  const ModelSpec traffic = builtin_model("traffic_forward");
  CHECK(numerical_flux(0, 0, 1.0, 1.0, 0.3, traffic, 0.05) == 0.0);

  // 0.5 (0 + 1) v(0.5) - (1 - 0) / (6 / 18) with v(c) = 1 - c.
  const ModelSpec tv = builtin_model("tv_example");
  const double hand = 0.5 * 1.0 * 0.5 - 3.0;
  CHECK(numerical_flux(0, 0, 0.0, 1.0, 0.5, tv, 1.0 / 18.0) == doctest::Approx(hand));
  CHECK(hand == -2.75);
}

TEST_CASE("local flux examples") {
  const ModelSpec lim = builtin_model("limit_family");
  CHECK(local_flux(0, 0, 0.5, 0.5, lim, 0.05) == doctest::Approx(0.0625).epsilon(1e-15));
  const ModelSpec traffic = builtin_model("traffic_forward");
  for (double r : {0.1, 0.5, 0.9}) {
    CHECK(local_flux(0, 0, r, r, traffic, 0.05) ==
          doctest::Approx(traffic.flux(0, 0, r) * traffic.velocity(r)));
  }
}

TEST_CASE("nonlocal flux approaches the local flux as the kernel narrows") {
  const Grid g = build_grid(-1.0, 1.0, 4000, 0.05, 0.2);
  const State st = fixture::sampled_state(
      g, [](double x) { return 0.5 + 0.3 * std::sin(2 * std::numbers::pi * x); });
  double prev = std::numeric_limits<double>::infinity();
  for (double w : {0.2, 0.1, 0.05}) {
    ModelParams p;
    p.width = w;
    const ModelSpec m = builtin_model("limit_family", p);
    const ConvolutionField c = interface_convolution(st, kernel_cell_averages(m.kernel, g), g);
    double gap = 0.0;
    // Away from the edges, where the constant extension makes rho nonsmooth.
    for (long j = g.n_cells / 4; j < 3 * g.n_cells / 4; ++j) {
      const double rl = st.at(g, j);
      const double rr = st.at(g, j + 1);
      gap = std::max(gap, std::abs(numerical_flux(0, 0, rl, rr, c.at_interface(j), m, g.lambda) -
                                   local_flux(0, 0, rl, rr, m, g.lambda)));
    }
    CHECK(gap < prev / 3.0);
    prev = gap;
  }
}

TEST_CASE("stationary states") {
  SUBCASE("zero") {
    const ModelSpec m = builtin_model("traffic_forward");
    const Grid g = build_grid(-1.0, 1.0, 100, 0.05, m.kernel.radius());
    const KernelTable t = kernel_cell_averages(m.kernel, g);
    State s = fixture::sampled_state(g, [](double) { return 0.0; });
    for (int n = 0; n < 20; ++n) s = step(s, m, t, g);
    for (double v : s.rho) CHECK(v == 0.0);
  }
  SUBCASE("one for traffic") {
    const ModelSpec m = builtin_model("traffic_backward");
    const Grid g = build_grid(-1.0, 1.0, 100, 0.05, m.kernel.radius());
    const KernelTable t = kernel_cell_averages(m.kernel, g);
    State s = fixture::sampled_state(g, [](double) { return 1.0; });
    for (int n = 0; n < 50; ++n) s = step(s, m, t, g);
    for (double v : s.rho) CHECK(v == 1.0);
    CHECK(s.n == 50);
    CHECK(s.t == doctest::Approx(50 * g.tau));
  }
}

TEST_CASE("one step conserves mass") {
  const ModelSpec m = with_model("tv_example", 0.0, 0.2);
  const Grid g = build_grid(-4.0, 4.0, 1600, 0.05, m.kernel.radius());
  const KernelTable t = kernel_cell_averages(m.kernel, g);
  const State s0 = project_initial_datum(parse_pieces(fixture::kTvDatum), g);
  const State s1 = step(s0, m, t, g);
  double sum0 = 0.0;
  double sum1 = 0.0;
  for (long j = 0; j < g.n_cells; ++j) {
    sum0 += s0.at(g, j);
    sum1 += s1.at(g, j);
  }
  CHECK(std::abs(sum1 - sum0) <= 1e-12 * sum0);
}

TEST_CASE("step matches the brute-force transcription") {
  for (const char* name : {"traffic_forward", "traffic_backward", "tv_example"}) {
    const ModelSpec m = with_model(name, -0.05, 0.15);
    const Grid g = build_grid(-2.0, 2.0, 400, 0.05, m.kernel.radius());
    const KernelTable t = kernel_cell_averages(m.kernel, g);
    State s = fixture::random_state(g, 11);
    State ref = s;
    Stepper stepper(m, t, g);
    for (int n = 0; n < 10; ++n) {
      s = stepper.step(s);
      ref = brute_force_step(ref, m, t, g);
      ref.t = s.t;
      for (long j = 0; j < g.n_cells; ++j) CHECK(s.at(g, j) == doctest::Approx(ref.at(g, j)).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("non-finite values raise numerical blowup") {
  ModelSpec m = builtin_model("tv_example");
  m.flux = [](double, double x, double r) {
    return x > 0.5 ? std::numeric_limits<double>::quiet_NaN() : r;
  };
  const Grid g = build_grid(0.0, 1.0, 100, 0.05, m.kernel.radius());
  const KernelTable t = kernel_cell_averages(m.kernel, g);
  const State s = fixture::sampled_state(g, [](double) { return 0.5; });
  try {
    step(s, m, t, g);
    FAIL("expected blowup");
  } catch (const NumericalBlowup& e) {
    CHECK(e.kind() == ErrorKind::numerical_blowup);
    CHECK(e.step() == 1);
    CHECK(e.cell() >= 49);
    CHECK(e.cell() < 100);
  }
}

TEST_CASE("backends produce bit-identical trajectories") {
  const ModelSpec m = builtin_model("traffic_forward");
  const Grid g = build_grid(-16.0, 16.0, 1600, 0.05, m.kernel.radius());
  const KernelTable t = kernel_cell_averages(m.kernel, g);
  State a = project_initial_datum(parse_pieces(fixture::kTrafficDatum), g);
  State b = a;
  Stepper sa(m, t, g, Mode::nonlocal, Backend::serial);
  Stepper sb(m, t, g, Mode::nonlocal, Backend::openmp);
  for (int n = 0; n < 100; ++n) {
    a = sa.step(a);
    b = sb.step(b);
  }
  CHECK(a.rho == b.rho);
}

TEST_CASE("positivity and flat-level comparison on random data") {
  for (unsigned seed = 1; seed <= 4; ++seed) {
    for (const char* name : {"traffic_forward", "traffic_backward"}) {
      const ModelSpec m = builtin_model(name);
      const Grid g = build_grid(-2.0, 2.0, 400, 0.05, m.kernel.radius());
      const KernelTable t = kernel_cell_averages(m.kernel, g);
      State s = fixture::random_state(g, seed);
      Stepper st(m, t, g);
      for (int n = 0; n < 200; ++n) {
        s = st.step(s);
        for (long j = 0; j < g.n_cells; ++j) {
          REQUIRE(s.at(g, j) >= 0.0);
          REQUIRE(s.at(g, j) <= 1.0);
        }
      }
    }
  }
  // tv_example has only zero as a flat level; nonnegativity still holds.
  const ModelSpec m = with_model("tv_example", 0.0, 0.2);
  const Grid g = build_grid(-2.0, 2.0, 400, 0.05, m.kernel.radius());
  const KernelTable t = kernel_cell_averages(m.kernel, g);
  State s = fixture::random_state(g, 99);
  for (int n = 0; n < 200; ++n) {
    s = step(s, m, t, g);
    for (double v : s.rho) REQUIRE(v >= 0.0);
  }
}

TEST_CASE("local mode uses the interface average") {
  const ModelSpec m = builtin_model("limit_family");
  const Grid g = build_grid(-1.0, 1.0, 200, 0.05, 0.0);
  const KernelTable empty{};
  State s = fixture::random_state(g, 5);
  Stepper st(m, empty, g, Mode::local, Backend::serial);
  const State next = st.step(s);
  for (long j = -1; j < g.n_cells; ++j) {
    const double rl = s.at(g, j);
    const double rr = s.at(g, j + 1);
    CHECK(st.last_fluxes()[static_cast<std::size_t>(j + 1)] ==
          local_flux(s.t, g.interface(j), rl, rr, m, g.lambda));
  }
  CHECK(next.n == 1);
}
