#include <benchmark/benchmark.h>

#include "monoclass/catalog.hpp"
#include "monoclass/generators.hpp"
#include "monoclass/numerics.hpp"
#include "monoclass/relations.hpp"

using namespace monoclass;

namespace {

const Tolerance tol{};

void BM_SymEigen(benchmark::State& state) {
  Rand rng(1);
  const int d = static_cast<int>(state.range(0));
  const Matrix m = random_matrix(d, d, rng).symmetrized();
  for (auto _ : state) benchmark::DoNotOptimize(sym_eigen(m, tol));
}
BENCHMARK(BM_SymEigen)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_Classify(benchmark::State& state) {
  Rand rng(2);
  const MatrixOperator a = random_monotone(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(classify(a, tol));
}
BENCHMARK(BM_Classify)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_CyclicGramPsd(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MatrixOperator r = rotation(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(is_n_cyclic(r, n, tol));
}
BENCHMARK(BM_CyclicGramPsd)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_AlphaStar(benchmark::State& state) {
  const MatrixOperator chain = rotation_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brezis_haraux_alpha(chain, tol));
}
BENCHMARK(BM_AlphaStar)->Arg(1)->Arg(3)->Arg(5);

void BM_ClassifyRelation(benchmark::State& state) {
  Rand rng(3);
  const LinearRelation rel = random_monotone_relation(static_cast<int>(state.range(0)), rng, tol);
  for (auto _ : state) benchmark::DoNotOptimize(classify_relation(rel, tol));
}
BENCHMARK(BM_ClassifyRelation)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
