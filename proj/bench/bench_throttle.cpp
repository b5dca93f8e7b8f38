// Serial reference search versus the OpenMP search on a few exhaustive instances.

#include <benchmark/benchmark.h>

#include "szf/families.hpp"
#include "szf/throttling.hpp"

namespace {

template <szf::Execution E>
void run(benchmark::State& state, const szf::Graph& g) {
  const szf::SearchOptions opts{E, std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(szf::throttle(g, opts).th);
}

void BM_Spider55Serial(benchmark::State& s) { run<szf::Execution::serial>(s, szf::spider(5, 5)); }
void BM_Spider55Parallel(benchmark::State& s) { run<szf::Execution::parallel>(s, szf::spider(5, 5)); }
void BM_Q4Serial(benchmark::State& s) { run<szf::Execution::serial>(s, szf::hypercube(4)); }
void BM_Q4Parallel(benchmark::State& s) { run<szf::Execution::parallel>(s, szf::hypercube(4)); }
void BM_C18Serial(benchmark::State& s) { run<szf::Execution::serial>(s, szf::cycle(18)); }
void BM_C18Parallel(benchmark::State& s) { run<szf::Execution::parallel>(s, szf::cycle(18)); }

}  // namespace

BENCHMARK(BM_Spider55Serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Spider55Parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Q4Serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Q4Parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_C18Serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_C18Parallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
