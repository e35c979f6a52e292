#include <benchmark/benchmark.h>

#include <random>

#include "fracgrad/blur.hpp"
#include "fracgrad/coefficients.hpp"
#include "fracgrad/derivative.hpp"
#include "fracgrad/gradient.hpp"
#include "fracgrad/pipeline.hpp"

namespace {

using namespace fracgrad;

ImagePlane noise_plane(std::size_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, 255);
  ImagePlane p(size, size);
  for (double& v : p.samples()) v = dist(rng);
  return p;
}

MultiChannelImage noise_rgb(std::size_t size) {
  std::vector<ImagePlane> planes;
  for (std::uint64_t c = 0; c < 3; ++c) planes.push_back(noise_plane(size, c + 1));
  return MultiChannelImage(std::move(planes), ChannelSemantics::rgb);
}

void BM_Coefficients(benchmark::State& state) {
  const auto terms = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_coefficients(0.7, terms));
}
BENCHMARK(BM_Coefficients)->Arg(4)->Arg(16)->Arg(64);

void BM_DerivativeX(benchmark::State& state) {
  const auto plane = noise_plane(static_cast<std::size_t>(state.range(0)), 7);
  const auto coeffs = generate_coefficients(0.5, static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(derivative_x(plane, coeffs, BoundaryPolicy::replicate, {1}));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(plane.size()));
}
BENCHMARK(BM_DerivativeX)->Args({1024, 4})->Args({1024, 16});

void BM_DerivativeY(benchmark::State& state) {
  const auto plane = noise_plane(static_cast<std::size_t>(state.range(0)), 7);
  const auto coeffs = generate_coefficients(0.5, static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(derivative_y(plane, coeffs, BoundaryPolicy::replicate, {1}));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(plane.size()));
}
BENCHMARK(BM_DerivativeY)->Args({1024, 4})->Args({1024, 16});

void BM_GaussianBlur(benchmark::State& state) {
  const auto plane = noise_plane(1024, 9);
  const double sigma = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_blur(plane, sigma, {1}));
}
BENCHMARK(BM_GaussianBlur)->Arg(1)->Arg(2)->Arg(4);

void BM_Pipeline(benchmark::State& state) {
  const auto image = noise_rgb(static_cast<std::size_t>(state.range(0)));
  PipelineConfig config;
  config.order = 0.7;
  config.alpha = 0.4;
  config.parallelism = Parallelism{static_cast<unsigned>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(process_image(image, config));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_Pipeline)
    ->Args({1024, 1})
    ->Args({1024, 2})
    ->Args({1024, 8})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
