// Acceptance suite: one criterion per line, [PASS]/[FAIL] plus a short
// summary. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pairspan/bench.hpp"
#include "pairspan/clustering.hpp"
#include "pairspan/gen.hpp"
#include "pairspan/io.hpp"
#include "pairspan/mult_spanner.hpp"
#include "pairspan/pairwise_near.hpp"
#include "pairspan/pairwise_pure.hpp"
#include "pairspan/rng.hpp"
#include "pairspan/sourcewise.hpp"
#include "pairspan/subsetwise.hpp"
#include "pairspan/verify.hpp"
#include "support/oracle.hpp"

using namespace pairspan;

namespace {

Graph gnp(int n, double p, std::uint64_t seed) {
  GenSpec spec;
  spec.model = GraphModel::gnp;
  spec.n = n;
  spec.p = p;
  spec.seed = seed;
  return generate_graph(spec);
}

std::vector<std::pair<Node, Node>> sxs_pairs(const std::vector<Node>& s) {
  std::vector<std::pair<Node, Node>> pairs;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) pairs.emplace_back(s[i], s[j]);
  return pairs;
}

std::vector<std::pair<Node, Node>> sxv_pairs(const std::vector<Node>& s, int n) {
  std::vector<std::pair<Node, Node>> pairs;
  for (Node u : s)
    for (Node v = 0; v < n; ++v)
      if (v != u) pairs.emplace_back(u, v);
  return pairs;
}

[[noreturn]] void violation(const std::string& what) { throw std::runtime_error(what); }

const int kNs[] = {100, 200, 400};
const double kPs[] = {0.03, 0.1};
const int kSetSizes[] = {5, 12, 25};

// Audits and ledgers accumulated by criteria 1-4, consumed by 5 and 8.
struct StoredAudit {
  std::string label;
  SizeReport report;
};
std::vector<StoredAudit> g_audits;

struct StoredLadder {
  std::string label;
  int k;
  BuyLedger ledger;
};
std::vector<StoredLadder> g_ladders;
bool g_ladder_builds_completed = false;

std::string criterion_stretch_subsetwise() {
  int instances = 0;
  std::uint64_t seed = 1000;
  for (int n : kNs) {
    for (double p : kPs) {
      for (int s_size : kSetSizes) {
        for (int rep = 0; rep < 6; ++rep) {
          ++seed;
          Graph g = gnp(n, p, seed);
          std::vector<Node> s = sample_subset(n, s_size, seed + 7);
          auto [spanner, ledger] = build_subsetwise(g, {s, std::nullopt});
          auto pairs = sxs_pairs(s);
          StretchReport rep_s =
              verify_stretch(g, spanner.edges, pairs, StretchSpec::additive(2));
          if (!rep_s.pass)
            violation("n=" + std::to_string(n) + " seed=" + std::to_string(seed) +
                      ": " + rep_s.first_failure());
          g_audits.push_back({"subsetwise n=" + std::to_string(n) +
                                  " seed=" + std::to_string(seed),
                              audit_sizes(ledger)});
          ++instances;
        }
      }
    }
  }
  return std::to_string(instances) + " instances, 0 violations";
}

std::string criterion_stretch_sourcewise() {
  int instances = 0;
  std::uint64_t seed = 2000;
  for (int n : kNs) {
    for (double p : kPs) {
      for (int s_size : kSetSizes) {
        for (int k : {1, 2, 3}) {
          ++seed;
          Graph g = gnp(n, p, seed);
          std::vector<Node> s = sample_subset(n, s_size, seed + 7);
          auto [spanner, ledger] = build_sourcewise(g, {s, k, std::nullopt});
          auto pairs = sxv_pairs(s, n);
          StretchReport rep =
              verify_stretch(g, spanner.edges, pairs, StretchSpec::additive(2 * k));
          if (!rep.pass)
            violation("n=" + std::to_string(n) + " k=" + std::to_string(k) +
                      " seed=" + std::to_string(seed) + ": " + rep.first_failure());
          std::string label = "sourcewise n=" + std::to_string(n) +
                              " k=" + std::to_string(k) +
                              " seed=" + std::to_string(seed);
          g_audits.push_back({label, audit_sizes(ledger)});
          g_ladders.push_back({label, k, std::move(ledger)});
          ++instances;
        }
      }
    }
  }
  return std::to_string(instances) + " instances (k in {1,2,3}), 0 violations";
}

std::string criterion_stretch_pairwise_near() {
  int instances = 0;
  std::uint64_t seed = 3000;
  for (int n : kNs) {
    for (double p : kPs) {
      for (int num_pairs : {10, 40, 160}) {
        for (const char* eps : {"0.25", "0.5", "1.0"}) {
          ++seed;
          Graph g = gnp(n, p, seed);
          PairSpec pspec;
          pspec.mode = PairMode::random_pairs;
          pspec.count = num_pairs;
          pspec.seed = seed + 7;
          auto pairs = generate_pairs(n, pspec);
          NearAdditiveParams params;
          params.pairs = pairs;
          params.epsilon = Rational::from_decimal(eps).to_double();
          auto [spanner, ledger] = build_pairwise_near(g, params);
          StretchReport rep = verify_stretch(g, spanner.edges, pairs,
                                             StretchSpec::near_additive(eps));
          if (!rep.pass)
            violation("n=" + std::to_string(n) + " N=" + std::to_string(num_pairs) +
                      " eps=" + eps + ": " + rep.first_failure());
          g_audits.push_back({"pairwise-near n=" + std::to_string(n) + " N=" +
                                  std::to_string(num_pairs) + " eps=" + eps,
                              audit_sizes(ledger)});
          ++instances;
        }
      }
    }
  }
  return std::to_string(instances) +
         " instances (N in {10,40,160}, eps in {0.25,0.5,1.0}), 0 violations";
}

std::string criterion_stretch_pairwise_pure() {
  int instances = 0;
  std::uint64_t seed = 4000;
  for (int n : kNs) {
    for (double p : kPs) {
      for (int num_pairs : {10, 40, 160}) {
        for (int k : {1, 2}) {
          ++seed;
          Graph g = gnp(n, p, seed);
          PairSpec pspec;
          pspec.mode = PairMode::random_pairs;
          pspec.count = num_pairs;
          pspec.seed = seed + 7;
          auto pairs = generate_pairs(n, pspec);
          PureAdditiveParams params;
          params.pairs = pairs;
          params.k = k;
          auto [spanner, ledger] = build_pairwise_pure(g, params);
          StretchReport rep = verify_stretch(g, spanner.edges, pairs,
                                             StretchSpec::additive(4 * k));
          if (!rep.pass)
            violation("n=" + std::to_string(n) + " N=" + std::to_string(num_pairs) +
                      " k=" + std::to_string(k) + ": " + rep.first_failure());
          std::string label = "pairwise-pure n=" + std::to_string(n) + " N=" +
                              std::to_string(num_pairs) + " k=" + std::to_string(k);
          g_audits.push_back({label, audit_sizes(ledger)});
          g_ladders.push_back({label, k, std::move(ledger)});
          ++instances;
        }
      }
    }
  }
  g_ladder_builds_completed = true;
  return std::to_string(instances) +
         " instances (N in {10,40,160}, k in {1,2}), 0 violations";
}

std::string criterion_size_budgets() {
  if (g_audits.empty()) violation("no audits recorded (criteria 1-4 must run first)");
  for (const StoredAudit& a : g_audits)
    if (!a.report.pass) violation(a.label + ": " + a.report.first_failure());
  return std::to_string(g_audits.size()) + " size audits, all within budget";
}

std::string criterion_clustering_properties() {
  const double betas[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  SplitMix64 rng(606);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng.next_below(200));
    double p = 0.02 + rng.next_unit() * 0.25;
    Graph g = gnp(n, p, rng.next());
    double beta = betas[rng.next_below(5)];
    auto [cl, cg] = build_clustering(g, beta);
    ClusteringAudit audit = audit_clustering(g, cl, cg);
    if (!audit.ok)
      violation("trial " + std::to_string(trial) + " n=" + std::to_string(n) +
                " beta=" + std::to_string(beta) + ": " + audit.violations.front());
  }
  return "500 fuzzed (graph, beta) inputs, all properties hold";
}

std::string criterion_cluster_coverage() {
  SplitMix64 rng(707);
  int paths = 0;
  for (int trial = 0; trial < 16; ++trial) {
    int n = 30 + static_cast<int>(rng.next_below(170));
    double p = 0.03 + rng.next_unit() * 0.1;
    Graph g = gnp(n, p, rng.next());
    double beta = 0.25 * static_cast<double>(rng.next_below(5));
    auto [cl, cg] = build_clustering(g, beta);
    ClusterCoverageReport rep = audit_cluster_coverage(g, cl, cg, 500, rng.next());
    if (!rep.pass)
      violation("instance " + std::to_string(trial) + ": " + rep.witnesses.front());
    paths += rep.checked;
  }
  return std::to_string(paths) + " sampled shortest paths, all within the bound";
}

std::string criterion_ladder_invariants() {
  if (!g_ladder_builds_completed || g_ladders.empty())
    violation("ladder builds did not complete");
  long long pairs_checked = 0;
  for (const StoredLadder& l : g_ladders) {
    for (const PathRecord& r : l.ledger.records) {
      ++pairs_checked;
      if (r.reachable && !r.bought)
        violation(l.label + ": reachable pair (" + std::to_string(r.u) + "," +
                  std::to_string(r.v) + ") bought no rung");
      if (!r.reachable && r.bought)
        violation(l.label + ": unreachable pair marked bought");
      if (r.rung > l.k) violation(l.label + ": rung exceeds k");
      if (r.bought && r.rung == l.k && r.cost != 0)
        violation(l.label + ": nonzero cost at rung k");
    }
  }
  // Invariants (i)-(iii) are asserted inside the builders on every rung;
  // criteria 2 and 4 running to completion means none of them fired.
  return std::to_string(g_ladders.size()) + " ladder runs / " +
         std::to_string(pairs_checked) + " pairs: one rung each, rung <= k";
}

std::string criterion_oracle_equivalence() {
  SplitMix64 rng(909);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(63));
    Graph g = gnp(n, 0.05 + rng.next_unit() * 0.25, rng.next());
    auto dg = testsupport::floyd_warshall(g, g.full_edge_set());

    Node source = static_cast<Node>(rng.next_below(n));
    DistanceRow row = bfs_distances(g, g.full_edge_set(), source);
    for (int v = 0; v < n; ++v)
      if (row.at(v) != testsupport::oracle_dist(dg, source, v))
        violation("bfs mismatch at trial " + std::to_string(trial));

    EdgeSet h = g.empty_edge_set();
    for (int eid = 0; eid < g.num_edges(); ++eid)
      if (rng.next_unit() < 0.6) h.insert(eid);
    auto dh = testsupport::floyd_warshall(g, h);
    std::vector<std::pair<Node, Node>> pairs;
    for (int i = 0; i < 8; ++i)
      pairs.emplace_back(static_cast<Node>(rng.next_below(n)),
                         static_cast<Node>(rng.next_below(n)));
    StretchSpec spec = StretchSpec::additive(static_cast<int>(rng.next_below(4)));
    StretchReport rep = verify_stretch(g, h, pairs, spec);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [u, v] = pairs[i];
      bool expected;
      if (dg[u][v] == testsupport::kOracleInf)
        expected = true;
      else if (dh[u][v] == testsupport::kOracleInf)
        expected = false;
      else
        expected = static_cast<long long>(dh[u][v]) * spec.add.den <=
                   static_cast<long long>(dg[u][v]) * spec.add.den + spec.add.num;
      if (rep.rows[i].ok != expected)
        violation("verify_stretch verdict mismatch at trial " + std::to_string(trial));
    }
  }
  return "1000 random graphs (n <= 64), 0 discrepancies";
}

std::string criterion_mult_spanner() {
  struct Cell {
    int n;
    double p;
  };
  const Cell cells[] = {{60, 0.15}, {120, 0.08}, {240, 0.05}, {400, 0.04}, {500, 0.03}};
  SplitMix64 rng(1111);
  std::vector<int> dist;
  std::vector<Node> queue;
  for (const Cell& cell : cells) {
    Graph g = gnp(cell.n, cell.p, rng.next());
    for (int k : {2, 3, ceil_log2(cell.n)}) {
      EdgeSet h = greedy_mult_spanner(g, k);
      // Every G-edge within 2k-1 hops in H.
      const EdgeSet all_h = h;
      for (int eid = 0; eid < g.num_edges(); ++eid) {
        auto [u, v] = g.edge(eid);
        DistanceRow row = bfs_distances(g, all_h, u);
        if (!row.reached(v) || row.at(v) > 2 * k - 1)
          violation("edge stretch: n=" + std::to_string(cell.n) +
                    " k=" + std::to_string(k));
      }
      // Girth > 2k: no kept edge closes a short cycle.
      for (int eid = 0; eid < g.num_edges(); ++eid) {
        if (!h.contains(eid)) continue;
        EdgeSet without = g.empty_edge_set();
        for (int other = 0; other < g.num_edges(); ++other)
          if (other != eid && h.contains(other)) without.insert(other);
        auto [u, v] = g.edge(eid);
        DistanceRow row = bfs_distances(g, without, u);
        if (row.reached(v) && row.at(v) + 1 <= 2 * k)
          violation("girth: n=" + std::to_string(cell.n) + " k=" + std::to_string(k));
      }
    }
  }
  return "5 instances x k in {2,3,ceil(log2 n)}: edge stretch and girth hold";
}

std::string criterion_determinism() {
  BenchSpec spec;
  spec.graph.model = GraphModel::gnp;
  spec.graph.n = 150;
  spec.graph.p = 0.06;
  spec.graph.seed = 17;
  spec.pairs.mode = PairMode::subset_cross;
  spec.pairs.count = 10;
  spec.pairs.seed = 4;
  spec.constructions = {
      {Construction::subsetwise, 2, "0.5", std::nullopt},
      {Construction::sourcewise, 2, "0.5", std::nullopt},
      {Construction::pairwise_near, 2, "0.5", std::nullopt},
      {Construction::pairwise_pure, 1, "0.5", std::nullopt},
      {Construction::mult, 2, "0.5", std::nullopt},
      {Construction::preserver, 2, "0.5", std::nullopt},
  };
  auto csv_of = [&](const char* threads) {
    setenv("PAIRSPAN_THREADS", threads, 1);
    auto rows = run_benchmark(spec);
    std::ostringstream os;
    write_csv(os, rows);
    return os.str();
  };
  auto strip_time = [](const std::string& csv) {
    std::istringstream in(csv);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) out << line.substr(0, line.rfind(',')) << '\n';
    return out.str();
  };
  std::string a = csv_of("1");
  std::string b = csv_of("4");
  std::string c = csv_of("1");
  unsetenv("PAIRSPAN_THREADS");
  if (strip_time(a) != strip_time(b) || strip_time(a) != strip_time(c))
    violation("bench CSV differs across identical runs");
  return "3 runs (1 and 4 workers) byte-identical modulo wall_time_ms";
}

std::string criterion_sparsity() {
  int smaller = 0, preserver_wins = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = gnp(400, 0.1, seed);
    std::vector<Node> s = sample_subset(400, 16, seed + 50);
    auto [spanner, ledger] = build_subsetwise(g, {s, std::nullopt});
    if (spanner.edges.size() < g.num_edges()) ++smaller;
    EdgeSet baseline = preserver_baseline(g, sxs_pairs(s));
    if (baseline.size() < spanner.edges.size()) ++preserver_wins;
  }
  std::ostringstream os;
  os << "spanner sparser than G in " << smaller << "/20 seeds; preserver sparser "
     << "than spanner in " << preserver_wins << "/20 (informational)";
  if (smaller < 18) violation(os.str());
  return os.str();
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria = {
      {"C1  subsetwise stretch (+2 over S x S)", criterion_stretch_subsetwise},
      {"C2  sourcewise stretch (+2k over S x V)", criterion_stretch_sourcewise},
      {"C3  near-additive stretch ((1+eps)d+4)", criterion_stretch_pairwise_near},
      {"C4  purely-additive stretch (+4k)", criterion_stretch_pairwise_pure},
      {"C5  explicit-constant size budgets", criterion_size_budgets},
      {"C6  clustering properties (500 fuzzed)", criterion_clustering_properties},
      {"C7  absent-edges vs touching clusters", criterion_cluster_coverage},
      {"C8  ladder invariants and single buys", criterion_ladder_invariants},
      {"C9  oracle equivalence (n <= 64)", criterion_oracle_equivalence},
      {"C10 multiplicative spanner stretch/girth", criterion_mult_spanner},
      {"C11 bench CSV determinism", criterion_determinism},
      {"C12 sparsity sanity (gnp 400, |S|=16)", criterion_sparsity},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    auto stop = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(stop - start).count();
    std::printf("[%s] %s: %s (%.1fs)\n", ok ? "PASS" : "FAIL", c.name,
                detail.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures;
}
