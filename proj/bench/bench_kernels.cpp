// Serial reference vs OpenMP kernels on dense statevectors.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ghz/collective_gates.hpp"
#include "ghz/kernels.hpp"
#include "ghz/statevector.hpp"

namespace {

std::vector<ghz::cplx> random_amps(int n) {
  std::mt19937_64 rng(1234);
  std::normal_distribution<double> g;
  std::vector<ghz::cplx> a(std::size_t{1} << n);
  for (auto& v : a) v = {g(rng), g(rng)};
  return a;
}

template <auto Kernel>
void BM_pair_gate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto amps = random_amps(n);
  const ghz::Mat4 s = ghz::s_pair(0, n - 1).matrix;
  for (auto _ : state) {
    Kernel(amps, 0, n - 1, s);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <auto Kernel>
void BM_single_gate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto amps = random_amps(n);
  const ghz::Mat2 h = ghz::hadamard();
  for (auto _ : state) {
    Kernel(amps, n / 2, h);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <auto Kernel>
void BM_inner(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = random_amps(n);
  const auto b = random_amps(n);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.size()));
}

void BM_apply_S(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ghz::StateVector psi(n, random_amps(n));
  for (auto _ : state) benchmark::DoNotOptimize(ghz::apply_S(psi));
}

void BM_apply_S_exponential(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ghz::StateVector psi(n, random_amps(n));
  for (auto _ : state) benchmark::DoNotOptimize(ghz::apply_S_exponential(psi));
}

}  // namespace

BENCHMARK(BM_pair_gate<ghz::kernels::serial::apply_two>)->DenseRange(12, 20, 4);
BENCHMARK(BM_pair_gate<ghz::kernels::parallel::apply_two>)->DenseRange(12, 20, 4);
BENCHMARK(BM_single_gate<ghz::kernels::serial::apply_single>)->DenseRange(12, 20, 4);
BENCHMARK(BM_single_gate<ghz::kernels::parallel::apply_single>)->DenseRange(12, 20, 4);
BENCHMARK(BM_inner<ghz::kernels::serial::inner>)->DenseRange(12, 20, 4);
BENCHMARK(BM_inner<ghz::kernels::parallel::inner>)->DenseRange(12, 20, 4);
BENCHMARK(BM_apply_S)->DenseRange(8, 16, 4);
BENCHMARK(BM_apply_S_exponential)->DenseRange(8, 16, 4);

BENCHMARK_MAIN();
