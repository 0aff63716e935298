#include <benchmark/benchmark.h>

#include <random>

#include "so41kit/cohomology.hpp"
#include "so41kit/linalg.hpp"
#include "so41kit/module.hpp"
#include "so41kit/pbw.hpp"

using namespace so41kit;

namespace {

// Straighten a fixed mixed word; exercises the memoized swap table.
void BM_NormalizeWord(benchmark::State& state) {
  Word w;
  for (int i = 0; i < int(state.range(0)); ++i) {
    w.push_back(Gen::F1);
    w.push_back(Gen::E3);
    w.push_back(Gen::F2);
  }
  for (auto _ : state) benchmark::DoNotOptimize(normalize(w));
}
BENCHMARK(BM_NormalizeWord)->Arg(2)->Arg(4)->Arg(6);

void BM_MultiplyCasimir(benchmark::State& state) {
  UEnvElement om = casimir_g();
  for (auto _ : state) benchmark::DoNotOptimize(multiply(om, om));
}
BENCHMARK(BM_MultiplyCasimir);

SparseMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> val(-20, 20);
  std::uniform_int_distribution<std::size_t> col(0, n - 1);
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (int k = 0; k < 8; ++k) m.set(i, col(rng), Q(val(rng)));
  return m;
}

void BM_RankMod(benchmark::State& state) {
  SparseMatrix m = random_matrix(std::size_t(state.range(0)), 1234u);
  for (auto _ : state) benchmark::DoNotOptimize(rank_mod(m, 2147483647ull));
}
BENCHMARK(BM_RankMod)->Arg(100)->Arg(300);

void BM_ExactRank(benchmark::State& state) {
  SparseMatrix m = random_matrix(std::size_t(state.range(0)), 1234u);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_ExactRank)->Arg(60);

void BM_BuildTruncation(benchmark::State& state) {
  LambdaParam lam(1, 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_truncation(lam, int(state.range(0))));
}
BENCHMARK(BM_BuildTruncation)->Arg(4)->Arg(6);

void BM_DiracMatrix(benchmark::State& state) {
  ModuleTruncation mt = build_truncation(LambdaParam(1, 0), int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dirac_matrix(mt));
}
BENCHMARK(BM_DiracMatrix)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
