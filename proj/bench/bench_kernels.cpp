// Parallel kernels against their serial reference, plus tile extraction.
//
//   xsnn_bench --benchmark_filter=Conv
//
// The Parallel variants take the OpenMP thread count as their argument.
#include <benchmark/benchmark.h>
#include <omp.h>

#include "xsnn/crossbar.hpp"
#include "xsnn/kernels.hpp"
#include "xsnn/random.hpp"

using namespace xsnn;

namespace {

Tensor filled(Shape shape, std::uint64_t seed) {
  RandomStream rs(seed, StreamPurpose::Init, 0);
  Tensor t(std::move(shape));
  for (double& v : t.values()) v = rs.uniform() - 0.5;
  return t;
}

// conv2 of the desk vgg5 at T=10, batch 64: (640, 8, 14, 14) -> 16 channels
const Shape kConvIn{640, 8, 14, 14};
const Shape kConvW{16, 8, 3, 3};

void BM_ConvReference(benchmark::State& st) {
  const Tensor x = filled(kConvIn, 1), w = filled(kConvW, 2);
  for (auto _ : st) benchmark::DoNotOptimize(reference::conv2d(x, w, nullptr, {1, 1}));
}

void BM_ConvParallel(benchmark::State& st) {
  omp_set_num_threads(static_cast<int>(st.range(0)));
  const Tensor x = filled(kConvIn, 1), w = filled(kConvW, 2);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::conv2d(x, w, nullptr, {1, 1}));
}

void BM_ConvWeightGradReference(benchmark::State& st) {
  const Tensor x = filled(kConvIn, 1), g = filled({640, 16, 14, 14}, 3);
  for (auto _ : st) benchmark::DoNotOptimize(reference::conv2d_backward_weight(g, x, kConvW, {1, 1}));
}

void BM_ConvWeightGradParallel(benchmark::State& st) {
  omp_set_num_threads(static_cast<int>(st.range(0)));
  const Tensor x = filled(kConvIn, 1), g = filled({640, 16, 14, 14}, 3);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::conv2d_backward_weight(g, x, kConvW, {1, 1}));
}

void BM_LinearReference(benchmark::State& st) {
  const Tensor x = filled({640, 784}, 4), w = filled({128, 784}, 5);
  for (auto _ : st) benchmark::DoNotOptimize(reference::linear(x, w, nullptr));
}

void BM_LinearParallel(benchmark::State& st) {
  omp_set_num_threads(static_cast<int>(st.range(0)));
  const Tensor x = filled({640, 784}, 4), w = filled({128, 784}, 5);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::linear(x, w, nullptr));
}

void BM_TileExtraction(benchmark::State& st) {
  const std::size_t n = static_cast<std::size_t>(st.range(0));
  const CrossbarConfig cfg = CrossbarConfig::square(n);
  RandomStream rs(6, StreamPurpose::Init, n);
  ConductanceTile tile(n, n, cfg.g_min);
  for (double& g : tile.values.values()) g = cfg.g_min + (cfg.g_max - cfg.g_min) * rs.uniform();
  for (auto _ : st) benchmark::DoNotOptimize(extract_effective_conductance(tile, cfg));
}

}  // namespace

BENCHMARK(BM_ConvReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvWeightGradReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvWeightGradParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LinearReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LinearParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TileExtraction)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
