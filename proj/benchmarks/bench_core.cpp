#include <benchmark/benchmark.h>

#include "wcong/classifier.hpp"
#include "wcong/congruence.hpp"
#include "wcong/jetsolver.hpp"
#include "wcong/series.hpp"

using namespace wcong;

namespace {

Series2 dense(int cap, int salt) {
  Series2 f(cap);
  for (int j = 0; j <= cap; ++j)
    for (int k = 0; j + k <= cap; ++k) f.set_coeff(j, k, Rational(1 + (j * 7 + k * 3 + salt) % 11, 1 + (j + 2 * k) % 5));
  return f;
}

CongruenceGerm solved(int m, int order) {
  UmbilicNormalForm nf = UmbilicNormalForm::from_two_jet(1, -m);
  nf.free_coeffs[{Component::p, 3, 0}] = 1;
  nf.free_coeffs[{Component::q, m + 1, 0}] = Rational(1, 2);
  return solve_jet(nf, order).first;
}

void BM_SeriesMul(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  const Series2 f = dense(cap, 1), g = dense(cap, 4);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_SeriesMul)->DenseRange(4, 12, 4);

void BM_WSeries(benchmark::State& state) {
  const CongruenceGerm g = monomial_family(3, 1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(w_series(g));
}
BENCHMARK(BM_WSeries)->DenseRange(4, 10, 2);

void BM_SolveJet(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int order = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(solved(m, order));
}
BENCHMARK(BM_SolveJet)->Args({2, 5})->Args({3, 6})->Args({4, 7});

void BM_Classify(benchmark::State& state) {
  const Series2 delta = discriminant(solved(3, 6));
  for (auto _ : state) benchmark::DoNotOptimize(classify_discriminant(delta, 6));
}
BENCHMARK(BM_Classify);

}  // namespace

BENCHMARK_MAIN();
