#include <benchmark/benchmark.h>

#include <random>

#include "lapsum/decomposition.hpp"
#include "lapsum/density.hpp"
#include "lapsum/graph_source.hpp"
#include "lapsum/matching.hpp"
#include "lapsum/spectral.hpp"

using namespace lapsum;

namespace {

Graph sample(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_gnp(n, p, rng);
}

void BM_Spectrum(benchmark::State& state) {
  const Graph g = sample(static_cast<int>(state.range(0)), 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(g));
}
BENCHMARK(BM_Spectrum)->Arg(7)->Arg(20)->Arg(40)->Arg(80);

void BM_Blossom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = sample(n, 3.0 / n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(maximum_matching(g));
}
BENCHMARK(BM_Blossom)->Arg(50)->Arg(200)->Arg(800);

void BM_Density(benchmark::State& state) {
  const Graph g = sample(static_cast<int>(state.range(0)), 0.3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(density(g));
}
BENCHMARK(BM_Density)->Arg(10)->Arg(30)->Arg(60);

void BM_PartitionDensity(benchmark::State& state) {
  const Graph g = sample(static_cast<int>(state.range(0)), 0.4, 4);
  for (auto _ : state) benchmark::DoNotOptimize(partition_density(g));
}
BENCHMARK(BM_PartitionDensity)->Arg(6)->Arg(10)->Arg(14);

void BM_StarArboricity(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Graph g = make_family({FamilyKind::kCompleteBipartite, k, 2 * k + 1});
  StarArboricityOptions opts;
  opts.max_edges = g.size();
  for (auto _ : state) benchmark::DoNotOptimize(star_arboricity_exact(g, opts));
}
BENCHMARK(BM_StarArboricity)->Arg(2)->Arg(3)->Arg(4);

void BM_LabeledScan(benchmark::State& state) {
  for (auto _ : state) {
    GraphStream all(AllLabeledSource{static_cast<int>(state.range(0))});
    double worst = 0;
    while (auto g = all.next()) worst = std::max(worst, eps(*g, 1));
    benchmark::DoNotOptimize(worst);
  }
}
BENCHMARK(BM_LabeledScan)->Arg(5)->Arg(6);

}  // namespace
BENCHMARK_MAIN();
