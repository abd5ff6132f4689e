// Serial reference vs OpenMP kernels: tensor square, family sweep, character frontier.
#include "affcrystal/path_model.hpp"
#include "affcrystal/perfect.hpp"

#include <benchmark/benchmark.h>

using namespace affcrystal;

namespace {

const char* const kTypes[] = {"E6-1", "E7-1", "E8-1"};

void tensor_args(benchmark::internal::Benchmark* b) {
  for (int k = 0; k < 3; ++k) b->Arg(k);
}

void BM_TensorSerial(benchmark::State& state) {
  const auto b = build_crystal(build_datum(parse_type(kTypes[state.range(0)])));
  state.SetLabel(kTypes[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(tensor_product_serial(b.graph()).size());
}

void BM_TensorParallel(benchmark::State& state) {
  const auto b = build_crystal(build_datum(parse_type(kTypes[state.range(0)])));
  state.SetLabel(kTypes[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(tensor_product(b.graph()).size());
}

void BM_SweepSerial(benchmark::State& state) {
  const auto types = sweep_types(5);
  for (auto _ : state) benchmark::DoNotOptimize(verify_sweep_serial(types).size());
}

void BM_SweepParallel(benchmark::State& state) {
  const auto types = sweep_types(5);
  for (auto _ : state) benchmark::DoNotOptimize(verify_sweep(types).size());
}

void BM_CharacterSerial(benchmark::State& state) {
  const PathModel m(build_crystal(build_datum(parse_type("D4-1"))));
  for (auto _ : state) benchmark::DoNotOptimize(character_serial(m, 0, static_cast<int>(state.range(0))).size());
}

void BM_CharacterParallel(benchmark::State& state) {
  const PathModel m(build_crystal(build_datum(parse_type("D4-1"))));
  for (auto _ : state) benchmark::DoNotOptimize(character(m, 0, static_cast<int>(state.range(0))).size());
}

}  // namespace

BENCHMARK(BM_TensorSerial)->Apply(tensor_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TensorParallel)->Apply(tensor_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharacterSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharacterParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
