#include <benchmark/benchmark.h>

#include <random>

#include "qhecke/chareval.hpp"
#include "qhecke/hecke.hpp"
#include "qhecke/qmatrix.hpp"
#include "qhecke/walks.hpp"
#include "qhecke/wiring.hpp"

using namespace qhecke;

namespace {

GeneratorWord word_of_length(int n, int m) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(n * 100 + m));
  std::uniform_int_distribution<int> letter(1, n - 1);
  std::vector<int> letters(m);
  for (int& l : letters) l = letter(rng);
  return GeneratorWord(n, letters);
}

Method method_of(int k) { return static_cast<Method>(k); }

}  // namespace

static void BM_ProductOnePlusT(benchmark::State& state) {
  const auto word = word_of_length(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(product_one_plus_T(word));
}
BENCHMARK(BM_ProductOnePlusT)->Args({4, 8})->Args({5, 12})->Args({6, 16});

static void BM_MaskExpansion(benchmark::State& state) {
  const auto word = word_of_length(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mask_expansion_defects(word));
}
BENCHMARK(BM_MaskExpansion)->Arg(8)->Arg(12)->Arg(16);

static void BM_SigmaDp(benchmark::State& state) {
  const WiringDiagram d(word_of_length(static_cast<int>(state.range(0)), 12));
  const auto u = Permutation::identity(d.n());
  for (auto _ : state) benchmark::DoNotOptimize(sigma_dp(d, u));
}
BENCHMARK(BM_SigmaDp)->Arg(3)->Arg(4)->Arg(5);

static void BM_SigmaDirect(benchmark::State& state) {
  const WiringDiagram d(word_of_length(4, static_cast<int>(state.range(0))));
  const auto u = Permutation::identity(4);
  for (auto _ : state) benchmark::DoNotOptimize(sigma_direct_all(d, u));
}
BENCHMARK(BM_SigmaDirect)->Arg(8)->Arg(12);

static void BM_SigmaZalgebra(benchmark::State& state) {
  const WiringDiagram d(word_of_length(3, static_cast<int>(state.range(0))));
  const auto u = Permutation::parse("213");
  for (auto _ : state) benchmark::DoNotOptimize(sigma_zalgebra(d, u, u));
}
BENCHMARK(BM_SigmaZalgebra)->Arg(3)->Arg(5)->Arg(7);

// range(0) selects the method, range(1) the word length, on n = 4 with lambda = (2,1,1).
static void BM_EpsilonEval(benchmark::State& state) {
  const WiringDiagram d(word_of_length(4, static_cast<int>(state.range(1))));
  const Method m = method_of(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(epsilon_eval(d, {2, 1, 1}, m));
  state.SetLabel(method_name(m));
}
BENCHMARK(BM_EpsilonEval)->ArgsProduct({{0, 1, 2}, {6, 10, 14}});

static void BM_Straighten(benchmark::State& state) {
  const NCMonomial m = zero_weight_monomial(Permutation::parse("4321"), Permutation::parse("4321"));
  for (auto _ : state) benchmark::DoNotOptimize(straighten(m, static_cast<RewriteStrategy>(state.range(0))));
}
BENCHMARK(BM_Straighten)->Arg(0)->Arg(1);

static void BM_RPolys(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> rev(n);
  for (int i = 0; i < n; ++i) rev[i] = n - i;
  const Permutation w0(rev);
  const auto e = Permutation::identity(n);
  for (auto _ : state) benchmark::DoNotOptimize(r_polys(w0, e, e));
}
BENCHMARK(BM_RPolys)->Arg(3)->Arg(4)->Arg(5);

static void BM_PPolys(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> rev(n);
  for (int i = 0; i < n; ++i) rev[i] = n - i;
  const Permutation w0(rev);
  const auto e = Permutation::identity(n);
  const auto word = some_reduced_word(w0);
  for (auto _ : state) benchmark::DoNotOptimize(p_polys(w0, e, e, word));
}
BENCHMARK(BM_PPolys)->Arg(3)->Arg(4)->Arg(5);
BENCHMARK_MAIN();
