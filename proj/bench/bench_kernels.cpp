// Serial reference vs OpenMP kernels, plus one full split step.
//   ./bench_kernels --benchmark_filter=abs2

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "frictionless/gpe_solver.hpp"
#include "frictionless/kernels.hpp"

using namespace frictionless;
namespace k = frictionless::kernels;

namespace {

std::vector<cplx> field(std::size_t n) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> d;
  std::vector<cplx> v(n);
  for (auto& x : v) x = {d(rng), d(rng)};
  return v;
}

template <auto Fn>
void reduce(benchmark::State& state) {
  const auto psi = field(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(psi));
  state.SetBytesProcessed(state.iterations() * state.range(0) * static_cast<long>(sizeof(cplx)));
}

template <auto Fn>
void phase(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto psi = field(n);
  std::vector<double> r2(n, 1.0);
  for (auto _ : state) {
    Fn(psi, r2, 0.5, 1.0, 1e-6);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void split_step(benchmark::State& state) {
  const Grid grid{2, static_cast<std::size_t>(state.range(0)), 32.0};
  const auto psi0 = gaussian(grid, 1.0);
  PropagationPlan plan;
  plan.omegaSqOfT = [](double) { return 1.0; };
  plan.gOfT = [](double) { return 10.0; };
  plan.dt = 1e-4;
  plan.tEnd = 1e-2;  // 100 steps
  plan.backend = state.range(1) ? k::Backend::Parallel : k::Backend::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(propagate(psi0, plan).psi.amplitudes().data());
}

}  // namespace

BENCHMARK(reduce<k::serial::sum_abs2>)->Name("abs2/serial")->Range(1 << 12, 1 << 20);
BENCHMARK(reduce<k::parallel::sum_abs2>)->Name("abs2/parallel")->Range(1 << 12, 1 << 20);
BENCHMARK(reduce<k::serial::sum_abs4>)->Name("abs4/serial")->Range(1 << 12, 1 << 20);
BENCHMARK(reduce<k::parallel::sum_abs4>)->Name("abs4/parallel")->Range(1 << 12, 1 << 20);
BENCHMARK(phase<k::serial::potential_phase>)->Name("potential_phase/serial")->Range(1 << 12, 1 << 20);
BENCHMARK(phase<k::parallel::potential_phase>)->Name("potential_phase/parallel")->Range(1 << 12, 1 << 20);
BENCHMARK(split_step)->ArgsProduct({{128, 256}, {0, 1}})->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
