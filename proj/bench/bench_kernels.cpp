// Serial reference kernels against their OpenMP versions.
//
//   ./build/bench/knaster_bench --benchmark_filter=Triangle

#include "knaster/coloring.hpp"
#include "knaster/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace knaster;

namespace {

PairColoring seeded(std::size_t ell) { return gen_star_coloring(ell, ColoringStrategy::SeededTriangleFree, 7); }

template <auto Kernel>
void exhaustive_triangles(benchmark::State& state) {
  const PairColoring h = seeded(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(h));
}

template <auto Kernel>
void sampled_triangles(benchmark::State& state) {
  const PairColoring h = seeded(16);
  const auto count = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(h, count, 3));
  state.SetItemsProcessed(static_cast<std::int64_t>(count) * state.iterations());
}

template <auto Kernel>
void zero_neighborhood(benchmark::State& state) {
  const PairColoring h = seeded(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(h, 0));
  state.SetItemsProcessed(static_cast<std::int64_t>(h.space_size()) * state.iterations());
}

template <auto Kernel>
void translation_scan(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Word> B;
  for (std::size_t i = 0; i < n; ++i) B.push_back(Word::unit(n, i));
  const Word x = Word::ones(n);
  std::vector<Word> A;
  for (std::size_t i = 0; i < 5; ++i) A.push_back(B[i] + x);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(A, B));
}

}  // namespace

BENCHMARK(exhaustive_triangles<kernels::zero_triangle_exhaustive_serial>)->Name("TriangleExhaustive/serial")->Arg(6)->Arg(8);
BENCHMARK(exhaustive_triangles<kernels::zero_triangle_exhaustive_parallel>)->Name("TriangleExhaustive/parallel")->Arg(6)->Arg(8);
BENCHMARK(sampled_triangles<kernels::zero_triangle_sampled_serial>)->Name("TriangleSampled/serial")->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(sampled_triangles<kernels::zero_triangle_sampled_parallel>)->Name("TriangleSampled/parallel")->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(zero_neighborhood<kernels::zero_neighborhood_serial>)->Name("ZeroNeighborhood/serial")->Arg(16)->Arg(20);
BENCHMARK(zero_neighborhood<kernels::zero_neighborhood_parallel>)->Name("ZeroNeighborhood/parallel")->Arg(16)->Arg(20);
BENCHMARK(translation_scan<kernels::translation_scan_serial>)->Name("TranslationScan/serial")->Arg(16)->Arg(20);
BENCHMARK(translation_scan<kernels::translation_scan_parallel>)->Name("TranslationScan/parallel")->Arg(16)->Arg(20);

BENCHMARK_MAIN();
