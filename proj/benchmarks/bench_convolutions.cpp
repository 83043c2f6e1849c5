// Implicit versus explicit padding, timed with google-benchmark. Argument
// ranges follow the power-of-two sizes used by conv-bench.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dealias/implicit1d.hpp"
#include "dealias/implicit_nd.hpp"
#include "dealias/oracles.hpp"

namespace {

using namespace dealias;

std::vector<Complex> random_vector(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  std::vector<Complex> v(n);
  for (auto& z : v) z = {d(rng), d(rng)};
  return v;
}

std::vector<Complex> random_hermitian(std::size_t m, unsigned seed) {
  auto v = random_vector(m, seed);
  v[0] = v[0].real();
  return v;
}

template <class F>
void fill(F& field, unsigned seed) {
  const auto v = random_vector(field.size(), seed);
  std::copy(v.begin(), v.end(), field.data());
  if (field.kind() != FieldKind::standard) enforce_symmetry(field);
}

// Inputs are restored outside the timed region.
void BM_cconv_implicit(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const auto f0 = random_vector(m, 1), g0 = random_vector(m, 2);
  ComplexConvolution c(m);
  auto ws = c.make_workspace();
  auto f = f0, g = g0;
  for (auto _ : state) {
    state.PauseTiming();
    f = f0, g = g0;
    state.ResumeTiming();
    c.convolve(f, g, ws);
    benchmark::DoNotOptimize(f.data());
  }
}

void BM_cconv_explicit(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const auto f0 = random_vector(m, 1), g0 = random_vector(m, 2);
  ExplicitConvolution1D c(ConvKind::cconv, m);
  auto f = f0;
  for (auto _ : state) {
    state.PauseTiming();
    f = f0;
    state.ResumeTiming();
    c.convolve(f, g0);
    benchmark::DoNotOptimize(f.data());
  }
}

void BM_hconv_implicit(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const auto f0 = random_hermitian(m, 1), g0 = random_hermitian(m, 2);
  HermitianConvolution c(m);
  auto ws = c.make_workspace();
  auto f = f0, g = g0;
  for (auto _ : state) {
    state.PauseTiming();
    f = f0, g = g0;
    state.ResumeTiming();
    c.convolve(f, g, ws);
    benchmark::DoNotOptimize(f.data());
  }
}

void BM_hconv_explicit(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const auto f0 = random_hermitian(m, 1), g0 = random_hermitian(m, 2);
  ExplicitConvolution1D c(ConvKind::hconv, m);
  auto f = f0;
  for (auto _ : state) {
    state.PauseTiming();
    f = f0;
    state.ResumeTiming();
    c.convolve(f, g0);
    benchmark::DoNotOptimize(f.data());
  }
}

void BM_cconv2_implicit(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  auto f0 = Field2D::standard(m, m), g0 = Field2D::standard(m, m);
  fill(f0, 1), fill(g0, 2);
  ComplexConvolution2D c(m, m);
  auto ws = c.make_workspace();
  Field2D f = f0, g = g0;
  for (auto _ : state) {
    state.PauseTiming();
    f = f0, g = g0;
    state.ResumeTiming();
    c.convolve(f, g, ws);
    benchmark::DoNotOptimize(f.data());
  }
}

void BM_cconv2_explicit(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const auto pruning = state.range(1) ? Pruning::pruned : Pruning::none;
  auto f0 = Field2D::standard(m, m), g0 = Field2D::standard(m, m);
  fill(f0, 1), fill(g0, 2);
  ExplicitConvolution2D c(ConvKind::cconv2, m, m, pruning);
  Field2D f = f0;
  for (auto _ : state) {
    state.PauseTiming();
    f = f0;
    state.ResumeTiming();
    c.convolve(f, g0);
    benchmark::DoNotOptimize(f.data());
  }
}

void BM_conv2_implicit(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  auto f0 = Field2D::hermitian(m, m), g0 = Field2D::hermitian(m, m);
  fill(f0, 1), fill(g0, 2);
  HermitianConvolution2D c(m, m);
  auto ws = c.make_workspace();
  Field2D f = f0, g = g0;
  for (auto _ : state) {
    state.PauseTiming();
    f = f0, g = g0;
    state.ResumeTiming();
    c.convolve(f, g, ws);
    benchmark::DoNotOptimize(f.data());
  }
}

void BM_conv2_explicit(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  auto f0 = Field2D::hermitian(m, m), g0 = Field2D::hermitian(m, m);
  fill(f0, 1), fill(g0, 2);
  ExplicitConvolution2D c(ConvKind::conv2, m, m);
  Field2D f = f0;
  for (auto _ : state) {
    state.PauseTiming();
    f = f0;
    state.ResumeTiming();
    c.convolve(f, g0);
    benchmark::DoNotOptimize(f.data());
  }
}

void BM_cconv3_implicit(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  auto f0 = Field3D::standard(m, m, m), g0 = Field3D::standard(m, m, m);
  fill(f0, 1), fill(g0, 2);
  ComplexConvolution3D c(m, m, m);
  auto ws = c.make_workspace();
  Field3D f = f0, g = g0;
  for (auto _ : state) {
    state.PauseTiming();
    f = f0, g = g0;
    state.ResumeTiming();
    c.convolve(f, g, ws);
    benchmark::DoNotOptimize(f.data());
  }
}

void BM_cconv3_explicit(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const auto pruning = state.range(1) ? Pruning::pruned : Pruning::none;
  auto f0 = Field3D::standard(m, m, m), g0 = Field3D::standard(m, m, m);
  fill(f0, 1), fill(g0, 2);
  ExplicitConvolution3D c(ConvKind::cconv3, m, m, m, pruning);
  Field3D f = f0;
  for (auto _ : state) {
    state.PauseTiming();
    f = f0;
    state.ResumeTiming();
    c.convolve(f, g0);
    benchmark::DoNotOptimize(f.data());
  }
}

}  // namespace

BENCHMARK(BM_cconv_implicit)->RangeMultiplier(4)->Range(64, 1 << 16);
BENCHMARK(BM_cconv_explicit)->RangeMultiplier(4)->Range(64, 1 << 16);
BENCHMARK(BM_hconv_implicit)->RangeMultiplier(4)->Range(64, 1 << 16);
BENCHMARK(BM_hconv_explicit)->RangeMultiplier(4)->Range(64, 1 << 16);
BENCHMARK(BM_cconv2_implicit)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cconv2_explicit)->ArgsProduct({{64, 128, 256, 512, 1024}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_conv2_implicit)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_conv2_explicit)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cconv3_implicit)->RangeMultiplier(2)->Range(16, 64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cconv3_explicit)->ArgsProduct({{16, 32, 64}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
