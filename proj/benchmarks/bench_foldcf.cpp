#include <benchmark/benchmark.h>

#include "foldcf/alpha.hpp"
#include "foldcf/builtin.hpp"
#include "foldcf/cf.hpp"
#include "foldcf/dioph.hpp"
#include "foldcf/expand.hpp"
#include "foldcf/fold.hpp"
#include "foldcf/series.hpp"

namespace {

foldcf::CF word_of_length(std::size_t len) {
  foldcf::CF cf{foldcf::Int(0), {}};
  for (std::size_t i = 0; i < len; ++i) cf.word.emplace_back(static_cast<long>(1 + (i * 7) % 13));
  return cf;
}

void BM_Fold(benchmark::State& state) {
  const auto cf = word_of_length(static_cast<std::size_t>(state.range(0)));
  const foldcf::Int z(1000003);
  for (auto _ : state) benchmark::DoNotOptimize(foldcf::fold(cf, z, foldcf::Sign::Plus));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Fold)->RangeMultiplier(4)->Range(16, 16384)->Complexity();

void BM_CfFromRational(benchmark::State& state) {
  const auto cf = word_of_length(static_cast<std::size_t>(state.range(0)));
  const foldcf::Rat v = foldcf::cf_value(cf);
  for (auto _ : state) benchmark::DoNotOptimize(foldcf::cf_from_rational(v));
}
BENCHMARK(BM_CfFromRational)->RangeMultiplier(4)->Range(16, 4096);

void BM_GenLuroth(benchmark::State& state) {
  const auto spec = foldcf::builtin_example("lur1");
  for (auto _ : state) benchmark::DoNotOptimize(foldcf::gen_sequences(spec, state.range(0)));
}
BENCHMARK(BM_GenLuroth)->DenseRange(4, 10, 2);

void BM_ExpandLuroth(benchmark::State& state) {
  const auto spec = foldcf::builtin_example("lur1");
  for (auto _ : state) benchmark::DoNotOptimize(foldcf::expand_series(spec, state.range(0)));
}
BENCHMARK(BM_ExpandLuroth)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_VerifyKempner(benchmark::State& state) {
  const auto spec = foldcf::builtin_example("kempner:2");
  for (auto _ : state) benchmark::DoNotOptimize(foldcf::verify_expansion(spec, state.range(0)));
}
BENCHMARK(BM_VerifyKempner)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

void BM_MuEstimate(benchmark::State& state) {
  const auto spec = foldcf::builtin_example("altlur2");
  for (auto _ : state) benchmark::DoNotOptimize(foldcf::mu_estimate(spec, state.range(0)));
}
BENCHMARK(BM_MuEstimate)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_AlphaEval(benchmark::State& state) {
  foldcf::MuParams p;
  p.C = 1;
  p.nu = 1.5;
  p.terms = {foldcf::PseudoTerm{1, 0.5, 0}, foldcf::PseudoTerm{3, 1, 1}};
  foldcf::Int u, v;
  mpz_ui_pow_ui(u.get_mpz_t(), 7, static_cast<unsigned long>(state.range(0)));
  mpz_ui_pow_ui(v.get_mpz_t(), 3, static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(foldcf::alpha_eval(p, 4, u, v));
}
BENCHMARK(BM_AlphaEval)->RangeMultiplier(10)->Range(10, 10000);

}  // namespace

BENCHMARK_MAIN();
