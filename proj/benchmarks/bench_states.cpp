#include <benchmark/benchmark.h>

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "rewind/hamt.hpp"
#include "rewind/states.hpp"

namespace {

void BM_HamtInsert(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    rwd::PersistentMap<std::int64_t, std::int64_t> m;
    for (std::int64_t i = 0; i < n; ++i) m = m.set(i * 7919, i);
    benchmark::DoNotOptimize(m.size());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_HamtInsert)->Arg(1000)->Arg(100000);

void BM_HamtFind(benchmark::State& state) {
  const auto n = state.range(0);
  rwd::PersistentMap<std::int64_t, std::int64_t> m;
  for (std::int64_t i = 0; i < n; ++i) m = m.set(i * 7919, i);
  std::int64_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.find((k++ % n) * 7919));
  }
}
BENCHMARK(BM_HamtFind)->Arg(1000)->Arg(100000);

// Snapshot, one write, restore: the cost a failed alternative pays.
void BM_MapStateBacktrack(benchmark::State& state) {
  rwd::MapState<std::int64_t, std::int64_t> cell;
  for (std::int64_t i = 0; i < state.range(0); ++i) cell.put(i, i);
  std::int64_t k = 0;
  for (auto _ : state) {
    auto snap = cell.snapshot();
    cell.put(k++, -1);
    cell.restore(snap);
  }
}
BENCHMARK(BM_MapStateBacktrack)->Arg(1000)->Arg(100000);

// The same with a copied std::map, for scale.
void BM_CopyStateMapBacktrack(benchmark::State& state) {
  std::map<std::int64_t, std::int64_t> init;
  for (std::int64_t i = 0; i < state.range(0); ++i) init[i] = i;
  rwd::CopyState<std::map<std::int64_t, std::int64_t>> cell(init);
  std::int64_t k = 0;
  for (auto _ : state) {
    auto snap = cell.snapshot();
    cell.mutate()[k++] = -1;
    cell.restore(snap);
  }
}
BENCHMARK(BM_CopyStateMapBacktrack)->Arg(1000)->Arg(100000);

void BM_MonotonicDiffMerge(benchmark::State& state) {
  const auto pushes = state.range(0);
  rwd::MonotonicStack<std::int64_t> base;
  for (int i = 0; i < 1000; ++i) base.push(i);
  for (auto _ : state) {
    rwd::MonotonicStack<std::int64_t> s = base;
    auto snap = s.snapshot();
    for (std::int64_t i = 0; i < pushes; ++i) s.push(i);
    auto delta = s.diff(snap);
    s.restore(snap);
    s.merge(delta);
    benchmark::DoNotOptimize(s.size());
  }
}
BENCHMARK(BM_MonotonicDiffMerge)->Arg(1)->Arg(64);

}  // namespace
