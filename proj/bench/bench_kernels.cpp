// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include <random>

#include "flatwitness/bezout.hpp"
#include "flatwitness/layered.hpp"
#include "flatwitness/witness.hpp"

namespace fw = flatwitness;

namespace {

fw::PointwiseRelation make_relation(std::size_t points, std::size_t n) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> nd;
  fw::PointwiseRelation rel;
  rel.n = n;
  rel.points = points;
  rel.weights.assign(points, 1.0);
  rel.r.resize(points * n);
  rel.m.resize(points * n);
  for (std::size_t x = 0; x < points; ++x) {
    fw::Complex dot = 0.0;
    double rr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      rel.r[x * n + i] = {nd(rng), nd(rng)};
      rel.m[x * n + i] = {nd(rng), nd(rng)};
      dot += rel.r[x * n + i] * rel.m[x * n + i];
      rr += std::norm(rel.r[x * n + i]);
    }
    for (std::size_t i = 0; i < n; ++i) rel.m[x * n + i] -= dot / rr * std::conj(rel.r[x * n + i]);
  }
  return rel;
}

fw::SampledFunction make_function(std::size_t atoms, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  fw::SampledFunction f{std::vector<fw::Complex>(atoms), std::vector<double>(atoms, 1.0)};
  for (auto& v : f.values) v = {nd(rng), nd(rng)};
  return f;
}

void BM_WitnessParallel(benchmark::State& state) {
  const auto rel = make_relation(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(fw::synthesize_witness(rel));
}

void BM_WitnessSerial(benchmark::State& state) {
  const auto rel = make_relation(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(fw::reference::synthesize_witness(rel));
}

void BM_BezoutParallel(benchmark::State& state) {
  const auto f = make_function(static_cast<std::size_t>(state.range(0)), 1);
  const auto g = make_function(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(fw::principal_generator(f, g));
}

void BM_BezoutSerial(benchmark::State& state) {
  const auto f = make_function(static_cast<std::size_t>(state.range(0)), 1);
  const auto g = make_function(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(fw::reference::principal_generator(f, g));
}

void BM_LayeredFactor(benchmark::State& state, fw::Execution exec) {
  const auto p = fw::make_circle_preset(64, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(fw::factor(p.f, p.layout, {fw::WeightMode::automatic, p.tail, exec}));
}

}  // namespace

BENCHMARK(BM_WitnessParallel)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_WitnessSerial)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_BezoutParallel)->Arg(1 << 14)->Arg(1 << 20);
BENCHMARK(BM_BezoutSerial)->Arg(1 << 14)->Arg(1 << 20);
BENCHMARK_CAPTURE(BM_LayeredFactor, parallel, fw::Execution::parallel)->Arg(64)->Arg(4096);
BENCHMARK_CAPTURE(BM_LayeredFactor, serial, fw::Execution::serial)->Arg(64)->Arg(4096);

BENCHMARK_MAIN();
