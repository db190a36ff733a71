#include <benchmark/benchmark.h>

#include "nivatk/annihilator.hpp"
#include "nivatk/decomposition.hpp"
#include "nivatk/laurent.hpp"
#include "nivatk/nivat.hpp"
#include "nivatk/text_format.hpp"

using namespace nivatk;

namespace {

const char* kFloorSum =
    "sum { +mechanical weights(1,1) alpha sqrt(2) -mechanical weights(1,0) alpha sqrt(2) "
    "-mechanical weights(0,1) alpha sqrt(2) }";

const Configuration& floor_sum() {
  static const Configuration c = parse_config(kFloorSum);
  return c;
}

void BM_PatternComplexity(benchmark::State& state) {
  const std::int64_t side = state.range(0);
  Window shape = Window::sized({4, 4});
  Window sample = Window::sized({side, side});
  for (auto _ : state) benchmark::DoNotOptimize(pattern_complexity(floor_sum(), shape, sample).count);
  state.SetItemsProcessed(state.iterations() * side * side);
}
BENCHMARK(BM_PatternComplexity)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

// (X^(1,0)-1)^k (X^(0,1)-1)^k squared: dense products with growing support.
void BM_LaurentMultiply(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  LaurentPolynomial f = LaurentPolynomial::constant(2, 1);
  for (int i = 0; i < k; ++i) f *= parse_polynomial("(x - 1)*(y - 1)*(x*y^-1 + 2)", 2);
  for (auto _ : state) benchmark::DoNotOptimize((f * f).term_count());
  state.counters["terms"] = static_cast<double>(f.term_count());
}
BENCHMARK(BM_LaurentMultiply)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_LineFactorization(benchmark::State& state) {
  LaurentPolynomial f = parse_polynomial("(x + y + 1)*(x^2 - 3*x + 1)*(y^2 + y - 1)*(x*y^-1 - 2)*(x^2*y - 1)", 2);
  for (auto _ : state) benchmark::DoNotOptimize(line_factorization(f).factors.size());
}
BENCHMARK(BM_LineFactorization)->Unit(benchmark::kMicrosecond);

void BM_Decompose(benchmark::State& state) {
  const std::int64_t side = state.range(0);
  std::vector<IntVector> vs{{1, 0}, {0, 1}, {1, -1}};
  Window core = Window::sized({side, side});
  Window halo = core.expanded({2, 2}, {2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(decompose(floor_sum(), vs, core, halo).rank);
}
BENCHMARK(BM_Decompose)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_Annihilates(benchmark::State& state) {
  const std::int64_t side = state.range(0);
  LaurentPolynomial f = product_of_differences({{1, 0}, {0, 1}, {1, -1}}, 2);
  Window w = Window::sized({side, side});
  for (auto _ : state) benchmark::DoNotOptimize(annihilates(f, floor_sum(), w).verdict);
}
BENCHMARK(BM_Annihilates)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
