#include <benchmark/benchmark.h>

#include "pairspan/gen.hpp"
#include "pairspan/mult_spanner.hpp"
#include "pairspan/pairwise_near.hpp"
#include "pairspan/pairwise_pure.hpp"
#include "pairspan/sourcewise.hpp"
#include "pairspan/subsetwise.hpp"

using namespace pairspan;

namespace {

Graph make_gnp(int n, double p, std::uint64_t seed) {
  GenSpec spec;
  spec.model = GraphModel::gnp;
  spec.n = n;
  spec.p = p;
  spec.seed = seed;
  return generate_graph(spec);
}

void BM_BfsDistances(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph g = make_gnp(n, 8.0 / n, 1);
  EdgeSet all = g.full_edge_set();
  for (auto _ : state) {
    DistanceRow row = bfs_distances(g, all, 0);
    benchmark::DoNotOptimize(row.dist.data());
  }
  state.SetItemsProcessed(state.iterations() * g.num_edges());
}
BENCHMARK(BM_BfsDistances)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_BuildClustering(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph g = make_gnp(n, 10.0 / n, 2);
  for (auto _ : state) {
    auto out = build_clustering(g, 0.5);
    benchmark::DoNotOptimize(out.first.clusters.data());
  }
}
BENCHMARK(BM_BuildClustering)->Arg(400)->Arg(2000)->Arg(10000);

void BM_GreedyMultSpanner(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph g = make_gnp(n, 16.0 / n, 3);
  for (auto _ : state) {
    EdgeSet h = greedy_mult_spanner(g, 3);
    benchmark::DoNotOptimize(h.size());
  }
}
BENCHMARK(BM_GreedyMultSpanner)->Arg(200)->Arg(400)->Arg(800);

void BM_BuildSubsetwise(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph g = make_gnp(n, 12.0 / n, 4);
  std::vector<Node> s = sample_subset(n, 16, 5);
  for (auto _ : state) {
    auto out = build_subsetwise(g, {s, std::nullopt});
    benchmark::DoNotOptimize(out.first.edges.size());
  }
}
BENCHMARK(BM_BuildSubsetwise)->Arg(200)->Arg(400)->Arg(800);

void BM_BuildSourcewise(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph g = make_gnp(n, 12.0 / n, 6);
  std::vector<Node> s = sample_subset(n, 8, 7);
  for (auto _ : state) {
    auto out = build_sourcewise(g, {s, 2, std::nullopt});
    benchmark::DoNotOptimize(out.first.edges.size());
  }
}
BENCHMARK(BM_BuildSourcewise)->Arg(200)->Arg(400);

void BM_BuildPairwiseNear(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph g = make_gnp(n, 12.0 / n, 8);
  PairSpec pspec;
  pspec.mode = PairMode::random_pairs;
  pspec.count = 40;
  pspec.seed = 9;
  NearAdditiveParams params;
  params.pairs = generate_pairs(n, pspec);
  params.epsilon = 0.5;
  for (auto _ : state) {
    auto out = build_pairwise_near(g, params);
    benchmark::DoNotOptimize(out.first.edges.size());
  }
}
BENCHMARK(BM_BuildPairwiseNear)->Arg(200)->Arg(400);

void BM_BuildPairwisePure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph g = make_gnp(n, 12.0 / n, 10);
  PairSpec pspec;
  pspec.mode = PairMode::random_pairs;
  pspec.count = 40;
  pspec.seed = 11;
  PureAdditiveParams params;
  params.pairs = generate_pairs(n, pspec);
  params.k = 2;
  for (auto _ : state) {
    auto out = build_pairwise_pure(g, params);
    benchmark::DoNotOptimize(out.first.edges.size());
  }
}
BENCHMARK(BM_BuildPairwisePure)->Arg(200)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
