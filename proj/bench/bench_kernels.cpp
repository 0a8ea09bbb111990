// Serial reference against the OpenMP path for the three parallel kernels. Thread count follows
// RGSSLAB_THREADS or the OpenMP default.

#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "rgsslab/beam.hpp"
#include "rgsslab/burgers.hpp"
#include "rgsslab/nlo.hpp"
#include "rgsslab/parallel.hpp"
#include "rgsslab/plasma.hpp"

using namespace rgsslab;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void BM_FdStep(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(1));
    std::vector<double> u(n), out;
    for (std::size_t j = 0; j < n; ++j) u[j] = std::exp(-std::pow(-15 + 30.0 * static_cast<double>(j) / static_cast<double>(n), 2));
    const double dx = 30.0 / static_cast<double>(n);
    for (auto _ : state) {
        burgers::fd_step(u, out, 1.0, 0.5, dx, 0.4 * dx * dx, exec_of(state));
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(n));
}
BENCHMARK(BM_FdStep)->ArgsProduct({{0, 1}, {4096, 65536}});

void BM_HodographGrid(benchmark::State& state) {
    nlo::HodographGridSpec spec;
    spec.n_min = 0.1;
    spec.n_max = 0.7;
    spec.nn = static_cast<std::size_t>(state.range(1));
    const auto beam = sech2_beam();
    for (auto _ : state) benchmark::DoNotOptimize(nlo::solve_hodograph(beam, 0.1, spec, exec_of(state)));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(spec.nn));
}
BENCHMARK(BM_HodographGrid)->ArgsProduct({{0, 1}, {61, 121}})->Unit(benchmark::kMillisecond);

// Probe sweep: the hot-plasma equation residual over a (mu, t) grid.
void BM_ProbeSweep(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(1));
    const plasma::PlasmaConfig cfg{plasma::Regime::Hot, 0.1};
    for (auto _ : state) {
        auto r = map_index<double>(
            n * n,
            [&](std::size_t i) {
                const double mu = -2 + 4.0 * static_cast<double>(i / n) / static_cast<double>(n);
                const double t = 6.283 * static_cast<double>(i % n) / static_cast<double>(n);
                const auto [a, b] = plasma::pde_residual(cfg, mu, t);
                return std::max(std::abs(a), std::abs(b));
            },
            exec_of(state));
        benchmark::DoNotOptimize(r.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(n * n));
}
BENCHMARK(BM_ProbeSweep)->ArgsProduct({{0, 1}, {32, 64}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
