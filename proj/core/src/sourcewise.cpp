#include "pairspan/sourcewise.hpp"

#include <algorithm>
#include <cmath>

#include "path_value.hpp"

namespace pairspan {

namespace {

struct SourceValue {
  int value = 0;
  std::vector<int> contributing_cids;
};

SourceValue source_value(const Path& p, const Clustering& cl,
                         const DistanceRow& row_from_source) {
  SourceValue out;
  detail::TouchingClusters touch = detail::touching_clusters(p, cl);
  for (std::size_t i = 0; i < touch.cids.size(); ++i) {
    const int cid = touch.cids[i];
    const int d_path = touch.positions[i].front();
    if (detail::min_row_over(row_from_source, cl.clusters[cid].members) > d_path) {
      ++out.value;
      out.contributing_cids.push_back(cid);
    }
  }
  return out;
}

int floor_div_gamma(int cost, double gamma) {
  return static_cast<int>(std::floor(static_cast<long double>(cost) / gamma +
                                     1e-12L));
}

// Ladder-path invariants: (i) bounded extra length,
// (ii) at most 3 path vertices per cluster, (iii) geometrically shrinking
// cost. (iii) is also enforced through exact integer checks at every step;
// the float form here only guards the final readout.
void assert_ladder_invariants(const CandidatePath& cp, int d_g,
                              int stretch_per_rung, const Clustering& cl,
                              double n1mb, double gamma) {
  PAIRSPAN_CHECK(cp.path.length() <= d_g + stretch_per_rung * cp.rung,
                 "ladder invariant (i) violated");
  std::vector<int> count(cl.num_clusters(), 0);
  for (Node v : cp.path.vertices) {
    int cid = cl.cluster_of[v];
    if (cid >= 0) {
      PAIRSPAN_CHECK(++count[cid] <= 3, "ladder invariant (ii) violated");
    }
  }
  long double bound = 2.0L * static_cast<long double>(n1mb) /
                      powl(static_cast<long double>(gamma), cp.rung);
  PAIRSPAN_CHECK(static_cast<long double>(cp.cost) <= bound + 1e-6L,
                 "ladder invariant (iii) violated");
}

CandidatePath refine_with_row(const Graph& g, const CandidatePath& cp,
                              Node source, const Clustering& cl,
                              const ClusterGraph& cg, const EdgeSet& current,
                              double gamma, const DistanceRow& row) {
  const Path& p = cp.path;
  PAIRSPAN_CHECK(cp.cost >= 1, "refine_sourcewise: zero-cost path never fails the buy test");
  const int q = floor_div_gamma(cp.cost, gamma);

  std::vector<int> absent = detail::absent_edge_positions(g, p, current);
  const int t = static_cast<int>(absent.size());
  PAIRSPAN_CHECK(t == cp.cost, "refine_sourcewise: stale cost");
  PAIRSPAN_CHECK(q < t, "refine_sourcewise: suffix would cover the whole path");
  // Longest suffix with exactly q absent edges starts right after the
  // (t-q)-th absent edge; its first vertex is clustered by the
  // missing-edge property.
  const int r_start = absent[t - q - 1] + 1;

  std::unordered_map<int, int> dist_to_cluster;  // cid -> dist(source, C)
  int witness_pos = -1, witness_cid = -1;
  for (int pos = r_start; pos <= p.length(); ++pos) {
    int cid = cl.cluster_of[p.vertices[pos]];
    if (cid < 0) continue;
    auto it = dist_to_cluster.find(cid);
    if (it == dist_to_cluster.end())
      it = dist_to_cluster
               .emplace(cid, detail::min_row_over(row, cl.clusters[cid].members))
               .first;
    if (it->second <= pos) {
      witness_pos = pos;
      witness_cid = cid;
      break;
    }
  }
  PAIRSPAN_CHECK(witness_pos >= 0, "refine_sourcewise: no witness cluster");

  // Nearest member of the witness cluster, smallest id on ties.
  const auto& members = cl.clusters[witness_cid].members;
  Node y = -1;
  int best = detail::kInfDist;
  for (Node m : members) {
    if (row.reached(m) && row.at(m) < best) {
      best = row.at(m);
      y = m;
    }
  }
  PAIRSPAN_CHECK(y >= 0, "refine_sourcewise: witness cluster unreachable");

  Path to_y = extract_path(g, current, row, y);
  std::vector<Node> walk = std::move(to_y.vertices);
  const Node x = p.vertices[witness_pos];
  if (y != x) {
    walk.push_back(cl.clusters[witness_cid].center);
    walk.push_back(x);
  }
  walk.insert(walk.end(), p.vertices.begin() + witness_pos + 1, p.vertices.end());

  Path refined = splice_simple(g, walk);
  refined = repair_multiplicity(g, refined, cl, cg, current);
  PAIRSPAN_CHECK(refined.front() == source && refined.back() == p.back(),
                 "refine_sourcewise: endpoints not preserved");
  int new_cost = path_cost(g, refined, current);
  PAIRSPAN_CHECK(new_cost <= q, "refine_sourcewise: cost did not shrink to floor(cost/gamma)");
  return {std::move(refined), cp.rung + 1, new_cost};
}

}  // namespace

double sourcewise_default_beta(int n, int s_size, int k) {
  if (n <= 1) return 0.0;
  double ln_n = std::log(static_cast<double>(n));
  double beta = (static_cast<double>(k) / (2.0 * k + 1.0)) *
                (ln_n / k + std::log((2.0 * k + 3.0) * s_size)) / ln_n;
  return std::clamp(beta, 0.0, 1.0);
}

int value_sourcewise(const Graph& g, const Path& p, Node source,
                     const Clustering& cl, const EdgeSet& current) {
  g.check_node(source, "value_sourcewise");
  DistanceRow row = bfs_distances(g, current, source);
  return source_value(p, cl, row).value;
}

CandidatePath refine_sourcewise(const Graph& g, const CandidatePath& cp,
                                Node source, const Clustering& cl,
                                const ClusterGraph& cg, const EdgeSet& current,
                                double gamma) {
  DistanceRow row = bfs_distances(g, current, source);
  return refine_with_row(g, cp, source, cl, cg, current, gamma, row);
}

std::pair<Spanner, BuyLedger> build_sourcewise(const Graph& g,
                                               const SourcewiseParams& params) {
  if (params.k < 1) throw std::invalid_argument("sourcewise: k must be >= 1");
  std::vector<Node> s = params.sources;
  if (s.empty()) throw std::invalid_argument("S must be nonempty");
  for (Node u : s) g.check_node(u, "source set");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());

  const int n = g.num_nodes();
  const int k = params.k;
  const double beta = params.beta.value_or(
      sourcewise_default_beta(n, static_cast<int>(s.size()), k));
  const double gamma = ladder_gamma(n, beta, k);
  const double n1mb = real_npow(n, 1.0 - beta);

  auto [cl, cg] = build_clustering(g, beta);
  EdgeSet current = cg.edges;
  const EdgeSet all = g.full_edge_set();

  Spanner spanner;
  spanner.clustering_edges = current.size();

  BuyLedger ledger;
  ledger.kind = Construction::sourcewise;
  ledger.n = n;
  ledger.set_size = static_cast<int>(s.size());
  ledger.k = k;
  ledger.beta = beta;
  ledger.gamma = gamma;

  std::uint64_t version = 0;
  std::uint64_t row_version = ~0ull;
  Node row_source = -1;
  DistanceRow row;
  auto current_row = [&](Node u) -> const DistanceRow& {
    if (row_source != u || row_version != version) {
      row = bfs_distances(g, current, u);
      row_source = u;
      row_version = version;
    }
    return row;
  };

  for (Node u : s) {
    DistanceRow in_g = bfs_distances(g, all, u);
    for (Node v = 0; v < n; ++v) {
      ++ledger.num_pairs;
      PathRecord rec;
      rec.u = u;
      rec.v = v;
      if (v == u) {
        rec.bought = true;
        ledger.records.push_back(rec);
        continue;
      }
      if (!in_g.reached(v)) {
        rec.reachable = false;
        ledger.records.push_back(rec);
        continue;
      }
      const int d_g = in_g.at(v);
      Path p = extract_path(g, all, in_g, v);
      CandidatePath cp{std::move(p), 0, 0};
      cp.cost = path_cost(g, cp.path, current);
      PAIRSPAN_CHECK(cp.cost <= 2 * cl.num_clusters(),
                     "sourcewise: rung-0 cost exceeds twice the cluster count");
      for (;;) {
        assert_ladder_invariants(cp, d_g, 2, cl, n1mb, gamma);
        const DistanceRow& cur_row = current_row(u);
        SourceValue sv = source_value(cp.path, cl, cur_row);
        if (static_cast<long double>(cp.cost) <=
            3.0L * static_cast<long double>(gamma) * sv.value) {
          if (cp.rung == k)
            PAIRSPAN_CHECK(cp.cost == 0, "sourcewise: nonzero cost at rung k");
          rec.bought = true;
          rec.rung = cp.rung;
          rec.cost = cp.cost;
          rec.value = sv.value;
          for (std::size_t e = 0; e + 1 < cp.path.vertices.size(); ++e) {
            int eid = g.edge_index(cp.path.vertices[e], cp.path.vertices[e + 1]);
            if (current.insert(eid)) ++rec.edges_added;
          }
          if (rec.edges_added > 0) ++version;
          ledger.sum_cost_bought += rec.cost;
          ledger.sum_value_bought += rec.value;
          for (int cid : sv.contributing_cids)
            ledger.note_contribution(static_cast<std::uint32_t>(u),
                                     static_cast<std::uint32_t>(cid));
          spanner.bought_edges += rec.edges_added;
          ledger.max_rung = std::max(ledger.max_rung, cp.rung);
          break;
        }
        PAIRSPAN_CHECK(cp.rung < k, "sourcewise: ladder exceeded k rungs");
        cp = refine_with_row(g, cp, u, cl, cg, current, gamma, cur_row);
      }
      ledger.records.push_back(rec);
    }
  }

  spanner.edges = std::move(current);
  return {std::move(spanner), std::move(ledger)};
}

}  // namespace pairspan
