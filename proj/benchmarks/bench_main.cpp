#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "numbase/codec.hpp"
#include "numbase/digit_text.hpp"
#include "numbase/mixed_radix.hpp"

using namespace numbase;

static void BM_EncodePrime(benchmark::State& state) {
  auto base = BaseSequence::prime();
  const auto top = static_cast<std::uint64_t>(state.range(0));
  encode_greedy(base, top);  // warm the prime cache
  std::uint64_t a = top / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(encode_greedy(base, a));
    if (++a > top) a = top / 2;
  }
}
BENCHMARK(BM_EncodePrime)->Arg(1000)->Arg(100000)->Arg(1000000);

static void BM_EncodeFactorialBig(benchmark::State& state) {
  auto base = BaseSequence::factorial();
  const Natural v = pow(Natural(10u), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(encode_greedy(base, v));
}
BENCHMARK(BM_EncodeFactorialBig)->Arg(20)->Arg(100)->Arg(500);

static void BM_VerifyRange(benchmark::State& state) {
  auto base = BaseSequence::square();
  const auto hi = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_range(base, 0u, hi));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(hi + 1));
}
BENCHMARK(BM_VerifyRange)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_FactorialAdd(benchmark::State& state) {
  auto base = BaseSequence::factorial();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> dist(0, 1000000000);
  std::vector<Representation> xs;
  for (int i = 0; i < 256; ++i) xs.push_back(encode_greedy(base, dist(rng)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(add(base, xs[i % 256], xs[(i + 1) % 256]));
    ++i;
  }
}
BENCHMARK(BM_FactorialAdd);

static void BM_FactorialAddViaDecode(benchmark::State& state) {
  auto base = BaseSequence::factorial();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> dist(0, 1000000000);
  std::vector<Representation> xs;
  for (int i = 0; i < 256; ++i) xs.push_back(encode_greedy(base, dist(rng)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(add_via_decode(base, xs[i % 256], xs[(i + 1) % 256]));
    ++i;
  }
}
BENCHMARK(BM_FactorialAddViaDecode);

static void BM_RenderParseDecimal(benchmark::State& state) {
  auto base = BaseSequence::power_of(10u);
  const auto rep = encode_greedy(base, Natural::from_decimal("123456789012345678901234567890"));
  for (auto _ : state) benchmark::DoNotOptimize(parse(base, render(rep)));
}
BENCHMARK(BM_RenderParseDecimal);
BENCHMARK_MAIN();
