#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "plap/model_geometry.hpp"
#include "plap/rayleigh.hpp"
#include "plap/rayleigh_kernels.hpp"

namespace kn = plap::kernels;

namespace {

struct Fixture {
  explicit Fixture(std::size_t N) : mesh(plap::make_rayleigh_mesh(plap::ModelSpace(3, 1.0), 10.0, N)), u(N + 1), out(N) {
    for (std::size_t j = 0; j <= N; ++j) u[j] = std::cos(1.5707963267948966 * static_cast<double>(j) / static_cast<double>(N));
  }
  kn::RayleighMesh mesh;
  std::vector<double> u;
  std::vector<double> out;
};

constexpr double kP = 2.5;

kn::Backend backend_of(const benchmark::State& state) {
  return state.range(1) == 0 ? kn::Backend::serial : kn::Backend::openmp;
}

void BM_Energy(benchmark::State& state) {
  Fixture f(static_cast<std::size_t>(state.range(0)));
  const kn::Backend b = backend_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(kn::energy(b, f.u, f.mesh, kP));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Mass(benchmark::State& state) {
  Fixture f(static_cast<std::size_t>(state.range(0)));
  const kn::Backend b = backend_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(kn::mass(b, f.u, f.mesh, kP));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Stiffness(benchmark::State& state) {
  Fixture f(static_cast<std::size_t>(state.range(0)));
  const kn::Backend b = backend_of(state);
  for (auto _ : state) {
    kn::stiffness(b, f.u, f.mesh, kP, 1e-14, f.out);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RayleighMinimize(benchmark::State& state) {
  plap::RayleighOptions opts;
  opts.mesh_size = static_cast<std::size_t>(state.range(0));
  opts.backend = backend_of(state);
  opts.tol = 1e-8;
  const plap::ModelSpace ms(3, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(plap::rayleigh_minimize(ms, kP, 10.0, opts).lambda);
}

void kernel_args(benchmark::internal::Benchmark* b) {
  for (long n : {1L << 12, 1L << 16, 1L << 20})
    for (long backend : {0L, 1L}) b->Args({n, backend});
  b->ArgNames({"N", "omp"});
}

}  // namespace

BENCHMARK(BM_Energy)->Apply(kernel_args);
BENCHMARK(BM_Mass)->Apply(kernel_args);
BENCHMARK(BM_Stiffness)->Apply(kernel_args);
BENCHMARK(BM_RayleighMinimize)->Args({2000, 0})->Args({2000, 1})->ArgNames({"N", "omp"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
