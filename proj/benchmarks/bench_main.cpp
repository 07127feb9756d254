#include <benchmark/benchmark.h>

#include "sepcol/analysis.hpp"
#include "sepcol/factorisation.hpp"

namespace {

using namespace sepcol;

void BM_ThueMorsePrefix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    // fresh word each round so the memo growth is measured
    const auto tm = InfiniteWord::thue_morse();
    benchmark::DoNotOptimize(tm.prefix(n));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ThueMorsePrefix)->Range(1 << 10, 1 << 16);

void BM_Phi(benchmark::State& state) {
  const auto tm = InfiniteWord::thue_morse();
  const auto u = tm.prefix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(phi(tm, u));
}
BENCHMARK(BM_Phi)->Arg(1)->Arg(12)->Arg(256);

void BM_VerifyPhi(benchmark::State& state) {
  const auto tm = InfiniteWord::thue_morse();
  const auto scheme = ColouringScheme::separating(tm);
  SearchCaps caps;
  caps.piece_len_cap = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_separating(tm, scheme, caps));
}
BENCHMARK(BM_VerifyPhi)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_VerifyTm3(benchmark::State& state) {
  const auto tm = InfiniteWord::thue_morse();
  const auto scheme = ColouringScheme::thue_morse_prefix3(tm);
  SearchCaps caps;
  caps.piece_len_cap = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_separating(tm, scheme, caps));
}
BENCHMARK(BM_VerifyTm3)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_Membership(benchmark::State& state) {
  const auto tm = InfiniteWord::thue_morse();
  const std::vector<FiniteWord> set = {parse_digits("01"), parse_digits("10"), parse_digits("0110")};
  const auto horizon = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(membership(tm, set, horizon));
}
BENCHMARK(BM_Membership)->Range(1 << 8, 1 << 14);

}  // namespace

BENCHMARK_MAIN();
