// Serial versus OpenMP timings for the curve batch and a corner sweep.

#include <benchmark/benchmark.h>

#include <vector>

#include "sgcm/core.hpp"
#include "sgcm/curve.hpp"
#include "sgcm/oracle.hpp"
#include "sgcm/parallel.hpp"

namespace {

using namespace sgcm;

void BM_BatchClassify(benchmark::State& state) {
  BatchOptions opts;
  opts.oracle_up_to = 20;
  opts.execution = state.range(1) ? Execution::Parallel : Execution::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(batch_classify(state.range(0), opts));
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}
BENCHMARK(BM_BatchClassify)->Args({30, 0})->Args({30, 1})->Unit(benchmark::kMillisecond);

std::vector<RingSpec> sweep_rings() {
  std::vector<RingSpec> out;
  for (std::int64_t a = 1; a <= 4; ++a)
    for (std::int64_t b = 1; b <= 4; ++b)
      for (std::int64_t p = 0; p <= 8; ++p)
        for (std::int64_t q = 0; q <= 8; ++q)
          if (p || q) out.push_back(validate({a, b, {{p, q}, {q + 1, p}}}));
  return out;
}

void BM_CornerSweep(benchmark::State& state) {
  const auto rings = sweep_rings();
  const Execution exec = state.range(0) ? Execution::Parallel : Execution::Serial;
  std::vector<std::size_t> sizes(rings.size());
  for (auto _ : state) {
    for_each_index(rings.size(), exec, [&](std::size_t i) { sizes[i] = corners(rings[i]).size(); });
    benchmark::DoNotOptimize(sizes.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * rings.size()));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_CornerSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
