#include <benchmark/benchmark.h>

#include <ffmoment/ensemble.hpp>
#include <ffmoment/enumerate.hpp>
#include <ffmoment/lfunc.hpp>
#include <ffmoment/moments.hpp>
#include <ffmoment/quad_char.hpp>

using namespace ffm;

namespace {

const MonicPoly& modulus_of_degree(int d) {
  static const std::vector<MonicPoly> first = [] {
    std::vector<MonicPoly> v;
    for (int n = 1; n <= 9; ++n) v.push_back(enumerate_irreducibles(3, n).front());
    return v;
  }();
  return first[d - 1];
}

void symbol_benchmark(benchmark::State& state, bool euler) {
  const int d = static_cast<int>(state.range(0));
  const MonicPoly& P = modulus_of_degree(d);
  const auto fs = enumerate_monic(3, d - 1);
  for (auto _ : state) {
    int acc = 0;
    for (const auto& f : fs) acc += to_int(euler ? quadratic_symbol_euler(f, P) : quadratic_symbol(f, P));
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fs.size()));
}

void BM_SymbolReciprocity(benchmark::State& state) { symbol_benchmark(state, false); }
void BM_SymbolEuler(benchmark::State& state) { symbol_benchmark(state, true); }

void lpoly_benchmark(benchmark::State& state, CharSumStrategy strategy) {
  const MonicPoly& P = modulus_of_degree(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(l_polynomial(P, strategy));
}

void BM_LPolyDirect(benchmark::State& state) { lpoly_benchmark(state, CharSumStrategy::direct); }
void BM_LPolyNewton(benchmark::State& state) { lpoly_benchmark(state, CharSumStrategy::newton); }

void BM_EnsembleBuild(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    PrimeEnsemble ens(3, g);
    benchmark::DoNotOptimize(ens.size());
  }
}

void BM_MixedMoment(benchmark::State& state) {
  const PrimeEnsemble ens(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mixed_moment_exact(ens, 2, 2));
}

}  // namespace

BENCHMARK(BM_SymbolReciprocity)->DenseRange(3, 9, 2);
BENCHMARK(BM_SymbolEuler)->DenseRange(3, 9, 2);
BENCHMARK(BM_LPolyDirect)->DenseRange(3, 9, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_LPolyNewton)->DenseRange(3, 9, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_EnsembleBuild)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MixedMoment)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
