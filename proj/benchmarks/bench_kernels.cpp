#include <benchmark/benchmark.h>

#include <random>

#include "oreqb/ore_poly.hpp"
#include "oreqb/properties.hpp"
#include "oreqb/registry.hpp"

using namespace oreqb;

namespace {

const char* const kContexts[] = {"EX_2_4", "EX_3_3", "EX_3_5", "EX_FINAL"};

std::vector<Elem> random_coeffs(const FiniteRing& R, std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::uint64_t> pick(0, R.order() - 1);
  std::vector<Elem> c(n);
  for (auto& e : c) e = R.element(pick(rng));
  return c;
}

void BM_OreMul(benchmark::State& state) {
  auto ctx = Registry::builtin().instantiate(kContexts[state.range(0)]);
  const auto n = static_cast<std::size_t>(state.range(1));
  std::mt19937_64 rng(1);
  const OrePoly p(ctx, random_coeffs(ctx->ring(), rng, n + 1));
  const OrePoly q(ctx, random_coeffs(ctx->ring(), rng, n + 1));
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
  state.SetLabel(kContexts[state.range(0)]);
}
BENCHMARK(BM_OreMul)->ArgsProduct({{0, 1, 2, 3}, {2, 8, 32}});

void BM_WordTable(benchmark::State& state) {
  auto ctx = Registry::builtin().instantiate(kContexts[state.range(0)]);
  const auto j = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(ctx->word_table(j));
  state.SetLabel(kContexts[state.range(0)]);
}
BENCHMARK(BM_WordTable)->ArgsProduct({{0, 1, 2, 3}, {4, 16}});

void BM_QuasiBaer(benchmark::State& state) {
  auto ctx = Registry::builtin().instantiate(kContexts[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(check_quasi_baer(ctx->ring_ptr()));
  state.SetLabel(kContexts[state.range(0)]);
}
BENCHMARK(BM_QuasiBaer)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_ArmendarizSearch(benchmark::State& state) {
  auto ctx = Registry::builtin().instantiate(state.range(0) == 0 ? "EX_FINAL" : "EX_3_5");
  ArmendarizOptions opts;
  opts.mode = ArmendarizOptions::Mode::Exhaustive;
  for (auto _ : state) benchmark::DoNotOptimize(check_skew_armendariz(ctx, opts));
}
BENCHMARK(BM_ArmendarizSearch)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

void BM_IdempotentSearch(benchmark::State& state) {
  auto ctx = Registry::builtin().instantiate("EX_3_5");
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(idempotent_search(ctx, d));
}
BENCHMARK(BM_IdempotentSearch)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
