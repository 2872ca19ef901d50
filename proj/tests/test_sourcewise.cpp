#include <doctest.h>

#include "pairspan/gen.hpp"
#include "pairspan/sourcewise.hpp"
#include "pairspan/verify.hpp"
#include "support/oracle.hpp"

using namespace pairspan;
using testsupport::floyd_warshall;
using testsupport::kOracleInf;

namespace {

Graph random_gnp(int n, double p, std::uint64_t seed) {
  GenSpec spec;
  spec.model = GraphModel::gnp;
  spec.n = n;
  spec.p = p;
  spec.seed = seed;
  return generate_graph(spec);
}

// Path 0-1-2-3-4-5 with three 2-node clusters {0,3},{1,4},{2,5} centered at
// 6,7,8, plus shortcut edges (0,2),(0,4) that make every cluster already
// close to node 0.
struct RefineFixture {
  Graph g{9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
              {0, 6}, {3, 6}, {1, 7}, {4, 7}, {2, 8}, {5, 8},
              {0, 2}, {0, 4}}};
  Clustering cl;
  ClusterGraph cg{g.empty_edge_set()};
  EdgeSet current{g.empty_edge_set()};

  RefineFixture() {
    cl.beta = 0.5;
    cl.size_threshold = 2;
    cl.cluster_of.assign(9, -1);
    cl.clusters.push_back({6, {0, 3}});
    cl.clusters.push_back({7, {1, 4}});
    cl.clusters.push_back({8, {2, 5}});
    for (int cid = 0; cid < 3; ++cid) {
      for (Node m : cl.clusters[cid].members) {
        cl.cluster_of[m] = cid;
        cg.edges.insert(g.edge_index(m, cl.clusters[cid].center));
      }
    }
    current = cg.edges;
    current.insert(g.edge_index(0, 2));
    current.insert(g.edge_index(0, 4));
  }
};

}  // namespace

TEST_CASE("value_sourcewise") {
  SUBCASE("path inside current and clusterless paths have value 0") {
    Graph g = random_gnp(30, 0.2, 8);
    auto [cl, cg] = build_clustering(g, 0.5);
    EdgeSet current = g.full_edge_set();
    auto p = shortest_path(g, current, 0, 17);
    if (p) CHECK(value_sourcewise(g, *p, 0, cl, current) == 0);

    Clustering none;
    none.cluster_of.assign(30, -1);
    if (p) CHECK(value_sourcewise(g, *p, 0, none, current) == 0);
  }

  SUBCASE("one improving cluster counts once") {
    Graph g(8, {{0, 1}, {1, 2}, {2, 3}, {2, 7}, {6, 7}});
    Clustering cl;
    cl.size_threshold = 2;
    cl.cluster_of.assign(8, -1);
    cl.clusters.push_back({7, {2, 6}});
    cl.cluster_of[2] = 0;
    cl.cluster_of[6] = 0;
    EdgeSet current = g.empty_edge_set();
    current.insert(g.edge_index(2, 7));
    current.insert(g.edge_index(6, 7));
    current.insert(g.edge_index(0, 1));
    current.insert(g.edge_index(2, 3));
    Path p{{0, 1, 2, 3}};
    CHECK(value_sourcewise(g, p, 0, cl, current) == 1);
    CHECK(value_sourcewise(g, p, 3, cl, current) == 0);
  }
}

TEST_CASE("refine_sourcewise hand replay") {
  RefineFixture f;
  Path p{{0, 1, 2, 3, 4, 5}};
  CandidatePath cp{p, 0, path_cost(f.g, p, f.current)};
  REQUIRE(cp.cost == 5);
  // All three clusters are within their along-path distance of node 0, so
  // value = 0 and the buy test fails at any gamma.
  CHECK(value_sourcewise(f.g, p, 0, f.cl, f.current) == 0);

  SUBCASE("gamma=2.5: suffix keeps 2 absent edges, witness is cluster {0,3}") {
    CandidatePath next = refine_sourcewise(f.g, cp, 0, f.cl, f.cg, f.current, 2.5);
    CHECK(next.rung == 1);
    CHECK(next.cost == 2);
    CHECK(next.path.vertices == std::vector<Node>{0, 6, 3, 4, 5});
    CHECK(next.path.length() <= cp.path.length() + 2);
  }

  SUBCASE("gamma >= cost: floor degeneracy gives a zero-cost path") {
    CandidatePath next = refine_sourcewise(f.g, cp, 0, f.cl, f.cg, f.current, 10.0);
    CHECK(next.rung == 1);
    CHECK(next.cost == 0);
    CHECK(next.path.vertices == std::vector<Node>{0, 2, 8, 5});
  }

  SUBCASE("zero-cost candidates are a contract violation") {
    CandidatePath zero{Path{{0, 2}}, 0, 0};
    CHECK_THROWS_AS(refine_sourcewise(f.g, zero, 0, f.cl, f.cg, f.current, 2.5),
                    InternalError);
  }
}

TEST_CASE("build_sourcewise") {
  SUBCASE("k < 1 rejected, empty S rejected") {
    Graph g = testsupport::path_graph(3);
    CHECK_THROWS_AS(build_sourcewise(g, {{0}, 0, std::nullopt}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_sourcewise(g, {{}, 1, std::nullopt}),
                    std::invalid_argument);
  }

  SUBCASE("S = V on K_5, k = 1") {
    Graph g = testsupport::complete_graph(5);
    SourcewiseParams params{{0, 1, 2, 3, 4}, 1, std::nullopt};
    auto [spanner, ledger] = build_sourcewise(g, params);
    CHECK(ledger.num_pairs == 25);
    auto dg = floyd_warshall(g, g.full_edge_set());
    auto dh = floyd_warshall(g, spanner.edges);
    for (int u = 0; u < 5; ++u)
      for (int v = 0; v < 5; ++v) CHECK(dh[u][v] <= dg[u][v] + 2);
    for (const PathRecord& r : ledger.records) CHECK(r.bought);
  }

  SUBCASE("tree input keeps exact distances") {
    GenSpec spec;
    spec.model = GraphModel::tree;
    spec.n = 60;
    spec.seed = 12;
    Graph g = generate_graph(spec);
    SourcewiseParams params{{1, 5, 9}, 2, std::nullopt};
    auto [spanner, ledger] = build_sourcewise(g, params);
    auto dg = floyd_warshall(g, g.full_edge_set());
    auto dh = floyd_warshall(g, spanner.edges);
    for (Node u : params.sources)
      for (int v = 0; v < 60; ++v) CHECK(dh[u][v] == dg[u][v]);
  }

  SUBCASE("tiny n with big S*k clamps beta to 1 and buys everything at rung 0") {
    Graph g = testsupport::complete_graph(4);
    SourcewiseParams params{{0, 1, 2, 3}, 3, std::nullopt};
    auto [spanner, ledger] = build_sourcewise(g, params);
    CHECK(ledger.beta == 1.0);
    CHECK(spanner.clustering_edges == g.num_edges());
    for (const PathRecord& r : ledger.records) {
      CHECK(r.bought);
      CHECK(r.rung == 0);
      CHECK(r.cost == 0);
    }
  }

  SUBCASE("gnp(200,0.05,7) with |S|=5, k=2: all 1000 pairs within +4") {
    Graph g = random_gnp(200, 0.05, 7);
    std::vector<Node> s = sample_subset(200, 5, 22);
    SourcewiseParams params{s, 2, std::nullopt};
    auto [spanner, ledger] = build_sourcewise(g, params);
    CHECK(ledger.num_pairs == 1000);

    auto dg = floyd_warshall(g, g.full_edge_set());
    auto dh = floyd_warshall(g, spanner.edges);
    for (Node u : s) {
      for (int v = 0; v < 200; ++v) {
        if (dg[u][v] == kOracleInf) continue;
        CHECK(dh[u][v] <= dg[u][v] + 4);
      }
    }

    // Exactly one rung bought per reachable pair, rung within budget.
    for (const PathRecord& r : ledger.records) {
      if (r.reachable) CHECK(r.bought);
      CHECK(r.rung <= 2);
    }
    CHECK(ledger.max_contribution() <= 2 * 2 + 3);
    CHECK(ledger.max_contribution_low32() <= (2 * 2 + 3) * 5);
    CHECK(audit_sizes(ledger).pass);
    double budget = 3.0 * ledger.gamma * (2.0 * 2 + 3.0) * 5 *
                    real_npow(200, 1.0 - ledger.beta);
    CHECK(static_cast<double>(ledger.sum_cost_bought) <= budget + 1e-6);
  }
}
