#include <benchmark/benchmark.h>

#include "noisebound/instances.hpp"
#include "noisebound/partition.hpp"
#include "noisebound/sampler.hpp"

using namespace noisebound;

static void BM_EnumerateSerialReference(benchmark::State& state) {
  const auto inst = generate_sk(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(reference::enumerate_serial({inst, 0.5, 0.0}).log_z);
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_EnumerateSerialReference)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_EnumerateGray(benchmark::State& state) {
  const auto inst = generate_sk(static_cast<int>(state.range(0)), 1);
  const EnumerationOptions options{.max_qubits = 30, .threads = static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate({inst, 0.5, 0.0}, options).log_z);
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_EnumerateGray)->ArgsProduct({{16, 20, 22}, {1, 2, 4}})->Unit(benchmark::kMillisecond);

static void BM_SpectrumMoments(benchmark::State& state) {
  const auto inst = generate_sk(20, 2);
  const EnergySpectrum spectrum(inst, {.max_qubits = 26, .threads = static_cast<int>(state.range(0))});
  double beta = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum.moments(beta).log_z);
    beta += 1e-3;
  }
}
BENCHMARK(BM_SpectrumMoments)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_GlauberSweep(benchmark::State& state) {
  const auto inst = generate_regular(static_cast<int>(state.range(0)), 3, -1, 3);
  GlauberChain chain(inst, 0.3, 0.0, 4);
  for (auto _ : state) {
    chain.sweep();
    benchmark::DoNotOptimize(chain.energy());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GlauberSweep)->Arg(64)->Arg(1024);

BENCHMARK_MAIN();
