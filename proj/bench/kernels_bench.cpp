// Serial reference vs parallel kernels at the desk-scale encoder shapes.

#include <benchmark/benchmark.h>

#include <vector>

#include "krom/numerics/kernels.hpp"
#include "krom/numerics/rng.hpp"

using namespace krom;

namespace {

std::vector<double> random_vec(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform(-1, 1);
  return v;
}

template <bool Parallel>
void bm_gemm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_vec(n * n, 1), b = random_vec(n * n, 2);
  std::vector<double> c(n * n);
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::parallel::gemm(false, true, n, n, n, 1.0, a, b, 0.0, c);
    else
      kernels::serial::gemm(false, true, n, n, n, 1.0, a, b, 0.0, c);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(2 * n * n * n));
}

// First encoder layer: batch of 36 states (6 windows, k=5), 2 -> 16 channels, 32x32, stride 2.
kernels::ConvGeom encoder_geom(std::size_t batch) {
  kernels::ConvGeom g;
  g.n = batch;
  g.c = 2;
  g.h = g.w = 32;
  g.o = 16;
  g.kh = g.kw = 3;
  g.stride = 2;
  g.pad = 1;
  g.infer_output();
  return g;
}

template <bool Parallel>
void bm_conv_forward(benchmark::State& state) {
  const auto g = encoder_geom(static_cast<std::size_t>(state.range(0)));
  const auto x = random_vec(g.in_size(), 3), w = random_vec(g.weight_size(), 4);
  std::vector<double> y(g.out_size());
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::parallel::conv2d_forward(g, x, w, y);
    else
      kernels::serial::conv2d_forward(g, x, w, y);
    benchmark::DoNotOptimize(y.data());
  }
}

template <bool Parallel>
void bm_conv_backward(benchmark::State& state) {
  const auto g = encoder_geom(static_cast<std::size_t>(state.range(0)));
  const auto x = random_vec(g.in_size(), 5), w = random_vec(g.weight_size(), 6), dy = random_vec(g.out_size(), 7);
  std::vector<double> dx(g.in_size()), dw(g.weight_size());
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::parallel::conv2d_backward_input(g, dy, w, dx);
      kernels::parallel::conv2d_backward_weight(g, x, dy, dw);
    } else {
      kernels::serial::conv2d_backward_input(g, dy, w, dx);
      kernels::serial::conv2d_backward_weight(g, x, dy, dw);
    }
    benchmark::DoNotOptimize(dx.data());
    benchmark::DoNotOptimize(dw.data());
  }
}

}  // namespace

BENCHMARK(bm_gemm<false>)->Name("gemm/serial")->Arg(64)->Arg(256);
BENCHMARK(bm_gemm<true>)->Name("gemm/parallel")->Arg(64)->Arg(256);
BENCHMARK(bm_conv_forward<false>)->Name("conv_forward/serial")->Arg(6)->Arg(36);
BENCHMARK(bm_conv_forward<true>)->Name("conv_forward/parallel")->Arg(6)->Arg(36);
BENCHMARK(bm_conv_backward<false>)->Name("conv_backward/serial")->Arg(6)->Arg(36);
BENCHMARK(bm_conv_backward<true>)->Name("conv_backward/parallel")->Arg(6)->Arg(36);

BENCHMARK_MAIN();
