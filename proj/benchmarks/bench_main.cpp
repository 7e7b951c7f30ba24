#include <benchmark/benchmark.h>

#include "qtangle/evaluator.hpp"
#include "qtangle/kz.hpp"
#include "qtangle/random.hpp"

namespace {

using namespace qtangle;

SlicedDiagram closed_braid(std::size_t n, std::size_t len) {
  Rng rng(7);
  return closure(braid_to_diagram(random_braid_word(rng, n, len), n), ClosureKind::Trace);
}

void BM_EvalClosedBraid(benchmark::State& state) {
  const SlicedDiagram d = closed_braid(3, static_cast<std::size_t>(state.range(0)));
  const TheoryData th = default_theory();
  for (auto _ : state) benchmark::DoNotOptimize(eval_scalar(d, th));
}
BENCHMARK(BM_EvalClosedBraid)->Arg(4)->Arg(8)->Arg(16);

void BM_StateSum(benchmark::State& state) {
  const SlicedDiagram d = closed_braid(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bracket_statesum(d));
}
BENCHMARK(BM_StateSum)->Arg(4)->Arg(8)->Arg(12);

void BM_KZTransport(benchmark::State& state) {
  const KZConfig config = KZConfig::standard(3, 0.2);
  const std::vector<int> word = {1, 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(transport_word(word, config, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_KZTransport)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
