#include <benchmark/benchmark.h>

#include "sepstates/harness.hpp"

namespace ss = sepstates;

static void BM_SchmidtDecompose(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  ss::Rng rng(1);
  const ss::PureState s = ss::random_pure_state(d, d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ss::schmidt_decompose(s));
  }
}
BENCHMARK(BM_SchmidtDecompose)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

static void BM_ApplyToPure(benchmark::State& state) {
  const int rounds = static_cast<int>(state.range(0));
  ss::Rng rng(2);
  const ss::ProductKrausSet op = ss::gen_separable_locc(3, 3, rounds, 2, rng);
  const ss::PureState s = ss::random_pure_state(3, 3, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ss::apply_to_pure(op, s));
  }
}
BENCHMARK(BM_ApplyToPure)->Arg(1)->Arg(2)->Arg(4);

static void BM_CheckEnsembleMajorization(benchmark::State& state) {
  ss::Rng rng(3);
  const ss::ProductKrausSet op = ss::gen_separable_locc(4, 4, 2, 2, rng);
  const ss::PureState s = ss::random_pure_state(4, 4, rng);
  const ss::Ensemble ens = ss::apply_to_pure(op, s);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ss::check_ensemble_majorization(s, ens));
  }
}
BENCHMARK(BM_CheckEnsembleMajorization);

static void BM_VerifyTheorem2(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  ss::Rng rng(4);
  const auto pairs = ss::gen_random_product_collection(d, d, 4, 0.8, rng);
  const ss::PureState s = ss::random_pure_state(d, d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ss::verify_theorem2(pairs, s));
  }
}
BENCHMARK(BM_VerifyTheorem2)->Arg(2)->Arg(3)->Arg(4);

static void BM_VerifyLemma1(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  ss::Rng rng(5);
  ss::RVec diag(d);
  for (int i = 0; i < d; ++i) diag(i) = rng.uniform();
  std::sort(diag.begin(), diag.end());
  diag /= diag.sum();
  const ss::CMat a = ss::ginibre(d, d, 1.0, rng);
  const ss::CMat b = ss::ginibre(d, d, 1.0, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ss::verify_lemma1(a, b, diag, d / 2 + 1));
  }
}
BENCHMARK(BM_VerifyLemma1)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
