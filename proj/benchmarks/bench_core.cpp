#include <cmath>

#include <benchmark/benchmark.h>

#include "axb/grid.hpp"
#include "axb/halfplane.hpp"
#include "axb/moduli.hpp"
#include "axb/representation.hpp"
#include "axb/spectral.hpp"

namespace {

axb::HalfLineFunction bump(const axb::GridPtr& g) {
  return axb::HalfLineFunction::sample(g, [](double x) {
    const double u = std::log(x);
    return axb::cplx(std::exp(-u * u));
  });
}

void BM_KernelTable(benchmark::State& state) {
  const auto g = axb::make_log_grid(-12.0, 6.0, static_cast<int>(state.range(0)));
  const axb::SpectralGrid sg(12.0, 256);
  for (auto _ : state) benchmark::DoNotOptimize(axb::build_kernel_table(g, sg));
}
BENCHMARK(BM_KernelTable)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_MatrixLaplacian(benchmark::State& state) {
  const auto g = axb::make_log_grid(-12.0, 6.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(axb::build_matrix_laplacian(g));
}
BENCHMARK(BM_MatrixLaplacian)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_HeatMultiplier(benchmark::State& state) {
  const auto g = axb::make_log_grid(-12.0, 6.0, 512);
  const auto op = axb::matrix_laplacian(g);
  const auto f = bump(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(axb::apply_multiplier([](double l) { return axb::cplx(std::exp(-l)); }, f, *op));
  }
}
BENCHMARK(BM_HeatMultiplier)->Unit(benchmark::kMicrosecond);

void BM_ModulusMixed(benchmark::State& state) {
  const auto g = axb::make_log_grid(-12.0, 6.0, 512);
  const axb::HalfLineSpace space(g);
  const auto f = bump(g);
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(axb::modulus_mixed(space, r, 0.5, f.values));
}
BENCHMARK(BM_ModulusMixed)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_PlaneLaplacian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = axb::make_halfplane_grid(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(axb::laplacian_2d(axb::Side::left, g));
}
BENCHMARK(BM_PlaneLaplacian)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
