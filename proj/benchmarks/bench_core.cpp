#include <benchmark/benchmark.h>

#include <random>

#include "sumrank/acd.hpp"
#include "sumrank/tlrs.hpp"

using namespace sumrank;

namespace {

std::shared_ptr<const FieldTower> tower(unsigned p, unsigned m) {
  return std::make_shared<const FieldTower>(FieldTower::make(p, m, 2));
}

void BM_TopMul(benchmark::State& state) {
  const auto tw = tower(static_cast<unsigned>(state.range(0)), 1);
  const auto n = tw->size(Level::top);
  std::uint32_t a = 1, b = 2;
  for (auto _ : state) {
    const Elem c = tw->mul({a, Level::top}, {b, Level::top});
    benchmark::DoNotOptimize(c);
    a = a + 1 == n ? 1 : a + 1;
    b = c.code == 0 ? 1 : c.code;
  }
}
BENCHMARK(BM_TopMul)->Arg(5)->Arg(13)->Arg(101);

void BM_Det(benchmark::State& state) {
  const auto tw = tower(13, 1);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  Mat m(n, n, Level::top);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = {static_cast<std::uint32_t>(rng() % 169), Level::top};
  for (auto _ : state) benchmark::DoNotOptimize(det(*tw, m));
}
BENCHMARK(BM_Det)->Arg(4)->Arg(16)->Arg(64);

void BM_TlrsGram(benchmark::State& state) {
  const auto tw = tower(13, 1);
  const unsigned ell = static_cast<unsigned>(state.range(0));
  const tlrs::TlrsParams params{QuotientCtx::subgroup(tw, ell), ell, 1, tw->parse("2+1u", Level::top)};
  const auto code = tlrs::build_code(params);
  for (auto _ : state) benchmark::DoNotOptimize(tlrs::gram(code, state.range(1) != 0));
}
BENCHMARK(BM_TlrsGram)->Args({2, 0})->Args({4, 0})->Args({4, 1});

void BM_AcdOracle(benchmark::State& state) {
  const auto tw = tower(13, 1);
  const unsigned k = static_cast<unsigned>(state.range(0));
  std::vector<Elem> l;
  for (std::uint32_t i = 1; i <= 2 * k + 1; ++i) l.push_back({i, Level::mid});
  const auto p = acd::make_params(tw, k, l, tw->skew_unit());
  for (auto _ : state) benchmark::DoNotOptimize(acd::acd_oracle(p));
}
BENCHMARK(BM_AcdOracle)->Arg(1)->Arg(3)->Arg(5);

void BM_LambdaSearch(benchmark::State& state) {
  const auto tw = tower(static_cast<unsigned>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(acd::lambda_search(tw, 2, 5, acd::SearchStrategy::automatic));
}
BENCHMARK(BM_LambdaSearch)->Arg(13)->Arg(29);

}  // namespace
BENCHMARK_MAIN();
