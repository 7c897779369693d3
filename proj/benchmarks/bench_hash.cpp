#include <random>
#include <string>

#include <benchmark/benchmark.h>

#include "dagmerkle/canonize.hpp"
#include "dagmerkle/hashing.hpp"
#include "dagmerkle/scc.hpp"

namespace {

using dagmerkle::LabeledDigraph;
using dagmerkle::NodeId;

LabeledDigraph path_graph(int n) {
  LabeledDigraph g;
  for (int i = 0; i < n; ++i) g.add_node("n" + std::to_string(i), "v");
  for (int i = 0; i + 1 < n; ++i) {
    g.add_edge("n" + std::to_string(i), "n" + std::to_string(i + 1));
  }
  return g;
}

LabeledDigraph random_dag(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution keep(p);
  std::uniform_int_distribution<int> label(0, 2);
  const std::string labels[] = {"x", "y", "z"};
  LabeledDigraph g;
  for (int i = 0; i < n; ++i) {
    g.add_node("n" + std::to_string(i), labels[label(rng)]);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (keep(rng)) g.add_edge("n" + std::to_string(i), "n" + std::to_string(j));
    }
  }
  return g;
}

LabeledDigraph directed_cycle(int n) {
  LabeledDigraph g;
  for (int i = 0; i < n; ++i) g.add_node("n" + std::to_string(i), "v");
  for (int i = 0; i < n; ++i) {
    g.add_edge("n" + std::to_string(i), "n" + std::to_string((i + 1) % n));
  }
  return g;
}

void bm_hash_path(benchmark::State& state) {
  const LabeledDigraph g = path_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dagmerkle::hash_graph(g).graph_digest);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_hash_path)->Range(64, 16384);

void bm_hash_random_dag(benchmark::State& state) {
  std::mt19937 rng(42);
  const LabeledDigraph g = random_dag(rng, static_cast<int>(state.range(0)), 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dagmerkle::hash_graph(g).graph_digest);
  }
}
BENCHMARK(bm_hash_random_dag)->Range(16, 512);

void bm_exact_hash_small(benchmark::State& state) {
  std::mt19937 rng(7);
  const LabeledDigraph g = random_dag(rng, static_cast<int>(state.range(0)), 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dagmerkle::exact_hash_graph(g).graph_digest);
  }
}
BENCHMARK(bm_exact_hash_small)->DenseRange(4, 12, 2);

void bm_condensation(benchmark::State& state) {
  const LabeledDigraph g = directed_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dagmerkle::condensation(g).size());
  }
}
BENCHMARK(bm_condensation)->Range(64, 16384);

void bm_canonize_cycle(benchmark::State& state) {
  const LabeledDigraph g = directed_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dagmerkle::canonize(g, dagmerkle::label_coloring(g)).order);
  }
}
BENCHMARK(bm_canonize_cycle)->Range(8, 256);

}  // namespace

BENCHMARK_MAIN();
