// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "nlcl/convolution.hpp"
#include "nlcl/datum.hpp"
#include "nlcl/diagnostics.hpp"
#include "nlcl/grid.hpp"
#include "nlcl/kernel.hpp"
#include "nlcl/model.hpp"
#include "nlcl/scheme.hpp"

namespace {

struct Setup {
  nlcl::ModelSpec model;
  nlcl::Grid grid;
  nlcl::KernelTable table;
  nlcl::State state;

  explicit Setup(long n_cells) {
    model = nlcl::builtin_model("traffic_forward");
    grid = nlcl::build_grid(-16.0, 16.0, n_cells, 0.05, model.kernel.radius());
    table = nlcl::kernel_cell_averages(model.kernel, grid);
    state = nlcl::project_initial_datum(
        nlcl::parse_pieces("-2.8:-1.8:0.5, -1.2:-0.2:0.75, 0.6:1.0:0.75, 1.5:inf:1"), grid);
  }
};

nlcl::Backend backend_of(const benchmark::State& st) {
  return st.range(1) == 0 ? nlcl::Backend::serial : nlcl::Backend::openmp;
}

void BM_Convolution(benchmark::State& st) {
  const Setup s(st.range(0));
  std::vector<double> out;
  for (auto _ : st) {
    nlcl::interface_convolution_into(s.state, s.table, s.grid, backend_of(st), out);
    benchmark::DoNotOptimize(out.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_Step(benchmark::State& st) {
  const Setup s(st.range(0));
  nlcl::Stepper stepper(s.model, s.table, s.grid, nlcl::Mode::nonlocal, backend_of(st));
  nlcl::State next;
  for (auto _ : st) {
    stepper.step_into(s.state, next);
    benchmark::DoNotOptimize(next.rho.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_EntropyResidual(benchmark::State& st) {
  const Setup s(st.range(0));
  const nlcl::State next = nlcl::step(s.state, s.model, s.table, s.grid);
  const auto ks = nlcl::default_k_lattice(s.state, next, s.grid);
  for (auto _ : st) {
    benchmark::DoNotOptimize(nlcl::entropy_residual(s.state, next, s.model, s.table, s.grid, ks,
                                                    nlcl::Mode::nonlocal,
                                                    nlcl::EntropySource::flux_times_velocity,
                                                    backend_of(st)));
  }
}

// Args: {n_cells, backend (0 serial, 1 openmp)}.
BENCHMARK(BM_Convolution)->ArgsProduct({{1600, 6400, 25600}, {0, 1}});
BENCHMARK(BM_Step)->ArgsProduct({{1600, 6400, 25600}, {0, 1}});
BENCHMARK(BM_EntropyResidual)->ArgsProduct({{1600, 6400}, {0, 1}});

}  // namespace

BENCHMARK_MAIN();
