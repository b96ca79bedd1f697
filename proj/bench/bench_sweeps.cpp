// Serial reference sweep against the OpenMP sweep on the same checks.

#include <benchmark/benchmark.h>

#include <string>

#include "bpair/modelcheck.hpp"

namespace {

void run_check(benchmark::State& state, const char* id, bpair::Execution exec,
               std::size_t samples) {
  bpair::EnumSpec spec;
  spec.samples = samples;
  for (auto _ : state) {
    const bpair::CheckReport r = bpair::check_theorem(id, spec, exec);
    benchmark::DoNotOptimize(r.instances);
    state.counters["instances"] = static_cast<double>(r.instances);
  }
}

void BM_Prop1(benchmark::State& s, bpair::Execution e) { run_check(s, "THM_PROP1", e, 0); }
void BM_ArrowIntersection(benchmark::State& s, bpair::Execution e) {
  run_check(s, "THM_ARROW_INTERSECTION", e, 0);
}
void BM_Continuity(benchmark::State& s, bpair::Execution e) {
  run_check(s, "THM_CONTINUITY", e, 10000);
}
void BM_WellDefined(benchmark::State& s, bpair::Execution e) {
  run_check(s, "PROP_SIGMA_RHO_WELLDEF", e, 500);
}

}  // namespace

BENCHMARK_CAPTURE(BM_Prop1, serial, bpair::Execution::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Prop1, parallel, bpair::Execution::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ArrowIntersection, serial, bpair::Execution::serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ArrowIntersection, parallel, bpair::Execution::parallel)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Continuity, serial, bpair::Execution::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Continuity, parallel, bpair::Execution::parallel)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_WellDefined, serial, bpair::Execution::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_WellDefined, parallel, bpair::Execution::parallel)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
