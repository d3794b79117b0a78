#include <benchmark/benchmark.h>

#include <string>

#include "rewind/examply/demos.hpp"
#include "rewind/examply/examply.hpp"

namespace {

// n classes, each with a field, a method and an anonymous subclass value.
std::string examply_program(int n) {
  std::string src;
  for (int i = 0; i < n; ++i) {
    const std::string c = "C" + std::to_string(i);
    src += "class " + c + "\n";
    src += "    var x: Int\n";
    src += "    fun get(): Int\n";
    src += "        x\n";
    src += "val v" + std::to_string(i) + " = " + c + "()\n";
    src += "    var y: " + c + "\n";
    src += "val w" + std::to_string(i) + " = run(" + std::to_string(i) + ", \"s\")\n";
  }
  return src;
}

void BM_ExamplyProgram(benchmark::State& state) {
  const std::string src = examply_program(static_cast<int>(state.range(0)));
  const auto& g = rwd::examply::examply_grammar();
  for (auto _ : state) {
    auto out = g.parse(src);
    if (!out.success) state.SkipWithError("parse failed");
    benchmark::DoNotOptimize(out.ast);
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * src.size()));
}
BENCHMARK(BM_ExamplyProgram)->Arg(10)->Arg(100)->Arg(400);

void BM_LeftRecChain(benchmark::State& state) {
  std::string src = "1";
  for (int i = 1; i < state.range(0); ++i) src += i % 2 ? " - " + std::to_string(i) : " + 7";
  const auto& g = rwd::examply::demo_expr();
  for (auto _ : state) {
    auto out = g.parse(src);
    if (!out.success) state.SkipWithError("parse failed");
    benchmark::DoNotOptimize(out.ast);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LeftRecChain)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_Anbncn(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::string src = std::string(n, 'a') + std::string(n, 'b') + std::string(n, 'c');
  const auto& g = rwd::examply::demo_anbncn();
  for (auto _ : state) benchmark::DoNotOptimize(g.parse(src).success);
}
BENCHMARK(BM_Anbncn)->Arg(100)->Arg(10000);

}  // namespace
