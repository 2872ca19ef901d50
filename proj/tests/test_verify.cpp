#include <doctest.h>

#include "pairspan/gen.hpp"
#include "pairspan/rng.hpp"
#include "pairspan/subsetwise.hpp"
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

}  // namespace

TEST_CASE("rational parsing and arithmetic") {
  Rational q = Rational::from_decimal("0.25");
  CHECK(q.num == 1);
  CHECK(q.den == 4);
  q = Rational::from_decimal("1");
  CHECK(q.num == 1);
  CHECK(q.den == 1);
  q = Rational::from_decimal("2.5");
  CHECK(q.num == 5);
  CHECK(q.den == 2);
  CHECK_THROWS_AS(Rational::from_decimal("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_decimal("1.0000000000001"), std::invalid_argument);

  Rational sum = Rational::from_int(1) + Rational::from_decimal("0.5");
  CHECK(sum.num == 3);
  CHECK(sum.den == 2);
}

TEST_CASE("stretch specs compare exactly") {
  StretchSpec near = StretchSpec::near_additive("0.25");
  CHECK(near.ok(4, 9));       // 1.25*4+4 = 9
  CHECK_FALSE(near.ok(4, 10));

  // 1.1*10+4 = 15 exactly; float would evaluate 11.000000000000002.
  StretchSpec tenth = StretchSpec::near_additive("0.1");
  CHECK(tenth.ok(10, 15));
  CHECK_FALSE(tenth.ok(10, 16));

  StretchSpec add2 = StretchSpec::additive(2);
  CHECK(add2.ok(7, 9));
  CHECK_FALSE(add2.ok(7, 10));

  StretchSpec mult3 = StretchSpec::multiplicative(3);
  CHECK(mult3.ok(2, 6));
  CHECK_FALSE(mult3.ok(2, 7));
}

TEST_CASE("verify_stretch") {
  Graph g = random_gnp(40, 0.15, 3);
  std::vector<std::pair<Node, Node>> pairs = {{0, 1}, {5, 20}, {3, 3}, {17, 8}};

  SUBCASE("full edge set always passes") {
    StretchReport rep = verify_stretch(g, g.full_edge_set(), pairs,
                                       StretchSpec::additive(0));
    CHECK(rep.pass);
    CHECK(rep.worst_excess <= 0.0);
  }

  SUBCASE("empty spanner fails reachable pairs") {
    REQUIRE(g.num_edges() > 0);
    auto [u, v] = g.edge(0);
    std::vector<std::pair<Node, Node>> adjacent = {{u, v}};
    StretchReport rep = verify_stretch(g, g.empty_edge_set(), adjacent,
                                       StretchSpec::additive(2));
    CHECK_FALSE(rep.pass);
    CHECK(rep.first_failure() != "");
  }

  SUBCASE("pairs unreachable in g are vacuously ok") {
    Graph two(4, {{0, 1}, {2, 3}});
    std::vector<std::pair<Node, Node>> cross = {{0, 2}};
    StretchReport rep = verify_stretch(two, two.full_edge_set(), cross,
                                       StretchSpec::additive(0));
    CHECK(rep.pass);
  }

  SUBCASE("out-of-range endpoints are rejected") {
    std::vector<std::pair<Node, Node>> bad = {{0, 40}};
    CHECK_THROWS_AS(verify_stretch(g, g.full_edge_set(), bad,
                                   StretchSpec::additive(0)),
                    std::invalid_argument);
  }

  SUBCASE("subsetwise output verifies end to end") {
    Graph big = random_gnp(100, 0.1, 2);
    std::vector<Node> s = sample_subset(100, 10, 4);
    auto [spanner, ledger] = build_subsetwise(big, {s, std::nullopt});
    std::vector<std::pair<Node, Node>> all_pairs;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        all_pairs.emplace_back(s[i], s[j]);
    StretchReport rep = verify_stretch(big, spanner.edges, all_pairs,
                                       StretchSpec::additive(2));
    CHECK(rep.pass);
    CHECK(rep.worst_excess <= 0.0);
  }

  SUBCASE("agrees with the Floyd-Warshall oracle on small graphs") {
    SplitMix64 rng(314);
    for (int trial = 0; trial < 40; ++trial) {
      int n = 2 + static_cast<int>(rng.next_below(63));
      Graph r = random_gnp(n, 0.15, rng.next());
      EdgeSet h = r.empty_edge_set();
      for (int eid = 0; eid < r.num_edges(); ++eid)
        if (rng.next_unit() < 0.6) h.insert(eid);
      std::vector<std::pair<Node, Node>> pp;
      for (int i = 0; i < 12; ++i)
        pp.emplace_back(static_cast<Node>(rng.next_below(n)),
                        static_cast<Node>(rng.next_below(n)));
      StretchSpec spec = StretchSpec::additive(static_cast<int>(rng.next_below(4)));
      StretchReport rep = verify_stretch(r, h, pp, spec);
      auto dg = floyd_warshall(r, r.full_edge_set());
      auto dh = floyd_warshall(r, h);
      REQUIRE(rep.rows.size() == pp.size());
      for (std::size_t i = 0; i < pp.size(); ++i) {
        auto [u, v] = pp[i];
        const StretchRow& row = rep.rows[i];
        CHECK(row.d_g == testsupport::oracle_dist(dg, u, v));
        bool expected_ok;
        if (dg[u][v] == kOracleInf) {
          expected_ok = true;
        } else if (dh[u][v] == kOracleInf) {
          expected_ok = false;
        } else {
          CHECK(row.d_h == dh[u][v]);
          expected_ok =
              static_cast<long long>(dh[u][v]) * spec.alpha.den * spec.add.den <=
              static_cast<long long>(spec.alpha.num) * dg[u][v] * spec.add.den +
                  spec.add.num * spec.alpha.den;
        }
        CHECK(row.ok == expected_ok);
      }
    }
  }
}

TEST_CASE("audit_sizes") {
  SUBCASE("zero bought paths trivially pass") {
    BuyLedger ledger;
    ledger.kind = Construction::subsetwise;
    ledger.n = 100;
    ledger.set_size = 5;
    ledger.beta = 0.4;
    SizeReport rep = audit_sizes(ledger);
    CHECK(rep.pass);
    CHECK(rep.first_failure() == "");
  }

  SUBCASE("a corrupted ledger is flagged") {
    Graph g = random_gnp(100, 0.1, 6);
    std::vector<Node> s = sample_subset(100, 8, 2);
    auto [spanner, ledger] = build_subsetwise(g, {s, std::nullopt});
    REQUIRE(audit_sizes(ledger).pass);
    ledger.sum_cost_bought += 100000;  // inflate past the budget
    SizeReport rep = audit_sizes(ledger);
    CHECK_FALSE(rep.pass);
    CHECK(rep.first_failure() != "");
  }

  SUBCASE("ledger without required parameters is rejected") {
    BuyLedger ledger;
    ledger.kind = Construction::sourcewise;
    ledger.k = 0;
    CHECK_THROWS_AS(audit_sizes(ledger), std::invalid_argument);
  }
}

TEST_CASE("audit_cluster_coverage edge cases") {
  SUBCASE("complete graph: every path has length <= 1") {
    Graph g = testsupport::complete_graph(12);
    auto [cl, cg] = build_clustering(g, 0.5);
    ClusterCoverageReport rep = audit_cluster_coverage(g, cl, cg, 100, 7);
    CHECK(rep.pass);
  }

  SUBCASE("trials must be positive") {
    Graph g = testsupport::complete_graph(3);
    auto [cl, cg] = build_clustering(g, 0.5);
    CHECK_THROWS_AS(audit_cluster_coverage(g, cl, cg, 0, 7), std::invalid_argument);
  }
}
