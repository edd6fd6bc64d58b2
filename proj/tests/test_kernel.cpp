#include <doctest.h>

#include <cmath>

#include "nlcl/error.hpp"
#include "nlcl/grid.hpp"
#include "nlcl/kernel.hpp"
#include "oracles.hpp"

using namespace nlcl;

TEST_CASE("kernel normalization against quadrature and closed form") {
  const KernelSpec k = normalize_kernel(0.0, 0.2);
  const double raw = oracle::integrate(
      [](double x) { return std::pow(x * (0.2 - x), 2.5); }, 0.0, 0.2, 1e-20);
  CHECK(k.alpha == doctest::Approx(1.0 / raw).epsilon(1e-9));
  CHECK(k.alpha == doctest::Approx(oracle::bump_alpha(0.0, 0.2)).epsilon(1e-10));
  CHECK(k.alpha == doctest::Approx(1.0186e6).epsilon(1e-4));
}

TEST_CASE("alpha depends only on the support width") {
  const KernelSpec a = normalize_kernel(0.0, 0.2);
  const KernelSpec b = normalize_kernel(-0.1, 0.1);
  CHECK(b.alpha == doctest::Approx(a.alpha).epsilon(1e-12));
  const KernelSpec c = normalize_kernel(3.0, 3.5);
  CHECK(c.alpha == doctest::Approx(oracle::bump_alpha(3.0, 3.5)).epsilon(1e-10));
}

TEST_CASE("degenerate supports are rejected") {
  for (auto [a, b] : {std::pair{0.0, 0.0}, std::pair{0.2, 0.0}}) {
    try {
      normalize_kernel(a, b);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::invalid_kernel);
    }
  }
}

TEST_CASE("kernel shape invariants") {
  for (auto [a, b] : {std::pair{0.0, 0.2}, std::pair{-0.25, 0.0}, std::pair{-0.004, 0.004}}) {
    const KernelSpec k = normalize_kernel(a, b);
    const double mass = oracle::integrate([&](double x) { return k(x); }, a, b, 1e-14);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(k(a) == 0.0);
    CHECK(k(b) == 0.0);
    CHECK(k(a - 1.0) == 0.0);
    CHECK(k(b + 1.0) == 0.0);
    CHECK(k.derivative(a) == 0.0);
    CHECK(k.derivative(b) == 0.0);
    for (int i = 1; i < 100; ++i) CHECK(k(a + (b - a) * i / 100.0) > 0.0);
    CHECK(k.radius() == doctest::Approx(std::max(std::abs(a), std::abs(b))));
  }
}

TEST_CASE("derivative norms agree with the closed forms") {
  for (auto [a, b] : {std::pair{0.0, 0.2}, std::pair{-0.25, 0.0}, std::pair{-0.1, 0.1}}) {
    const KernelSpec k = normalize_kernel(a, b);
    CHECK(k.norm_deta == doctest::Approx(oracle::bump_deta_norm(k.alpha, a, b)).epsilon(1e-6));
    CHECK(k.norm_d2eta == doctest::Approx(oracle::bump_d2eta_norm(k.alpha, a, b)).epsilon(1e-6));
  }
}

TEST_CASE("analytic derivatives match finite differences") {
  const KernelSpec k = normalize_kernel(-0.1, 0.1);
  const double d = 1e-6;
  for (double x : {-0.07, -0.03, 0.0, 0.02, 0.09}) {
    const double fd = (k(x + d) - k(x - d)) / (2 * d);
    CHECK(k.derivative(x) == doctest::Approx(fd).epsilon(1e-6));
    const double fd2 = (k.derivative(x + d) - k.derivative(x - d)) / (2 * d);
    CHECK(k.second_derivative(x) == doctest::Approx(fd2).epsilon(1e-6).scale(k.norm_d2eta));
  }
}

TEST_CASE("cell averaged weights") {
  SUBCASE("mass is preserved") {
    for (auto [a, b, h] : {std::tuple{0.0, 0.2, 0.01}, std::tuple{-0.25, 0.0, 0.02},
                           std::tuple{-0.013, 0.031, 0.0037}, std::tuple{-0.004, 0.004, 0.0025}}) {
      const KernelSpec k = normalize_kernel(a, b);
      const Grid g = build_grid(0.0, 1.0, static_cast<long>(std::lround(1.0 / h)), 0.05, k.radius());
      const KernelTable t = kernel_cell_averages(k, g);
      double mass = 0.0;
      for (double w : t.weights) mass += g.h * w;
      CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
  SUBCASE("weights are exact cell averages") {
    const KernelSpec k = normalize_kernel(0.0, 0.2);
    const Grid g = build_grid(0.0, 1.0, 100, 0.05, k.radius());
    const KernelTable t = kernel_cell_averages(k, g);
    for (long m = t.m_min; m <= t.m_max; ++m) {
      const double lo = (static_cast<double>(m) - 0.5) * g.h;
      const double hi = (static_cast<double>(m) + 0.5) * g.h;
      const double avg = oracle::integrate([&](double x) { return k(x); }, std::max(lo, 0.0),
                                           std::min(hi, 0.2), 1e-12) / g.h;
      CHECK(t.weight(m) == doctest::Approx(avg).epsilon(1e-9).scale(1.0));
    }
  }
  SUBCASE("support [0, 0.2] on h = 0.01") {
    const KernelSpec k = normalize_kernel(0.0, 0.2);
    const Grid g = build_grid(0.0, 1.0, 100, 0.05, k.radius());
    const KernelTable t = kernel_cell_averages(k, g);
    int nonzero = 0;
    for (double w : t.weights) nonzero += w > 0.0 ? 1 : 0;
    // Offsets 1..19 lie inside the support; offsets 0 and 20 are half cells.
    CHECK(nonzero == 21);
    CHECK(t.m_min == 0);
    CHECK(t.m_max == 20);
    CHECK(t.weight(-1) == 0.0);
    CHECK(t.weight(21) == 0.0);
    CHECK(t.weight(0) < t.weight(1));
  }
  SUBCASE("symmetric kernel gives a symmetric table") {
    const KernelSpec k = normalize_kernel(-0.1, 0.1);
    const Grid g = build_grid(-1.0, 1.0, 300, 0.05, k.radius());
    const KernelTable t = kernel_cell_averages(k, g);
    CHECK(t.m_min == -t.m_max);
    for (long m = 0; m <= t.m_max; ++m)
      CHECK(std::abs(t.weight(m) - t.weight(-m)) <= 1e-12 * t.weight(0));
  }
}
