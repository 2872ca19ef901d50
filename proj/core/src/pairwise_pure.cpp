#include "pairspan/pairwise_pure.hpp"

#include <algorithm>
#include <cmath>

#include "path_value.hpp"

namespace pairspan {

namespace {

// Clustered positions of p in ascending order, each with the index of its
// cluster in `touch`.
struct ClusteredIndex {
  std::vector<int> positions;
  std::vector<int> touch_index;
};

ClusteredIndex clustered_index(const Path& p, const Clustering& cl,
                               const detail::TouchingClusters& touch) {
  ClusteredIndex out;
  for (int i = 0; i < static_cast<int>(p.vertices.size()); ++i) {
    int cid = cl.cluster_of[p.vertices[i]];
    if (cid < 0) continue;
    out.positions.push_back(i);
    out.touch_index.push_back(touch.index_of(cid));
  }
  return out;
}

struct SpanSearch {
  detail::TouchingClusters touch;
  ClusteredIndex idx;
  std::vector<char> qualifies;  // t x t, symmetric

  int t() const { return static_cast<int>(touch.cids.size()); }
  bool qual(int i, int j) const { return qualifies[i * t() + j] != 0; }
};

SpanSearch make_span_search(const Graph& g, const Path& p, const Clustering& cl,
                            const EdgeSet& current) {
  SpanSearch s;
  s.touch = detail::touching_clusters(p, cl);
  s.idx = clustered_index(p, cl, s.touch);
  const int t = s.t();
  s.qualifies.assign(t * t, 0);
  detail::ClusterRowCache cache(g, cl, current);
  for (int i = 0; i < t; ++i) {
    s.qualifies[i * t + i] = 1;  // same cluster: 0 >= 0
    const DistanceRow& row_i = cache.row(s.touch.cids[i]);
    for (int j = i + 1; j < t; ++j) {
      int d_path = detail::min_position_gap(s.touch.positions[i], s.touch.positions[j]);
      int d_cur = detail::min_row_over(row_i, cl.clusters[s.touch.cids[j]].members);
      char q = d_path >= d_cur ? 1 : 0;
      s.qualifies[i * t + j] = q;
      s.qualifies[j * t + i] = q;
    }
  }
  return s;
}

std::pair<int, int> max_span_pair(const SpanSearch& s) {
  const int w = static_cast<int>(s.idx.positions.size()) - 1;
  for (int span = w; span >= 0; --span) {
    for (int a = 0; a + span <= w; ++a) {
      int b = a + span;
      if (s.qual(s.idx.touch_index[a], s.idx.touch_index[b])) return {a, b};
    }
  }
  internal_error("find_max_span_pair: no qualifying pair");
}

int floor_div_gamma(int cost, double gamma) {
  return static_cast<int>(std::floor(static_cast<long double>(cost) / gamma +
                                     1e-12L));
}

CandidatePath refine_pure_impl(const Graph& g, const CandidatePath& cp,
                               const Clustering& cl, const ClusterGraph& cg,
                               const EdgeSet& current, double gamma) {
  const Path& p = cp.path;
  PAIRSPAN_CHECK(cp.cost >= 1, "refine_pure: zero-cost path never fails the buy test");

  SpanSearch s = make_span_search(g, p, cl, current);
  const int w = static_cast<int>(s.idx.positions.size()) - 1;
  PAIRSPAN_CHECK(w >= 1, "refine_pure: a positive-cost path has two clustered vertices");
  auto [a, b] = max_span_pair(s);

  const int x = a + (w - b);
  const int q = floor_div_gamma(cp.cost, gamma);
  PAIRSPAN_CHECK(x <= q, "refine_pure: span bound x <= cost/gamma violated");

  const int pos_a = s.idx.positions[a];
  const int pos_b = s.idx.positions[b];
  const Node va = p.vertices[pos_a];
  const Node vb = p.vertices[pos_b];
  const int c1 = cl.cluster_of[va];
  const int c2 = cl.cluster_of[vb];

  // A: prefix up to va (at most `a` absent edges).
  std::vector<Node> walk(p.vertices.begin(), p.vertices.begin() + pos_a + 1);

  // B: bridge through `current`, extended via the cluster centers.
  if (a < b) {
    if (c1 == c2) {
      walk.push_back(cl.clusters[c1].center);
      walk.push_back(vb);
    } else {
      DistanceRow row = multi_source_bfs(g, current, cl.clusters[c1].members);
      Node y2 = -1;
      int best = detail::kInfDist;
      for (Node m : cl.clusters[c2].members) {
        if (row.reached(m) && row.at(m) < best) {
          best = row.at(m);
          y2 = m;
        }
      }
      PAIRSPAN_CHECK(y2 >= 0, "refine_pure: witness clusters disconnected in current");
      Path core = extract_path(g, current, row, y2);  // starts at some y1 in C1
      std::vector<Node> seq;
      if (core.front() != va) seq.push_back(cl.clusters[c1].center);
      seq.insert(seq.end(), core.vertices.begin(), core.vertices.end());
      if (y2 != vb) {
        seq.push_back(cl.clusters[c2].center);
        seq.push_back(vb);
      }
      std::size_t skip = !seq.empty() && seq.front() == walk.back() ? 1 : 0;
      walk.insert(walk.end(), seq.begin() + skip, seq.end());
    }
  }

  // C: suffix from vb (at most w-b absent edges).
  walk.insert(walk.end(), p.vertices.begin() + pos_b + 1, p.vertices.end());

  Path refined = splice_simple(g, walk);
  refined = repair_multiplicity(g, refined, cl, cg, current);
  PAIRSPAN_CHECK(refined.front() == p.front() && refined.back() == p.back(),
                 "refine_pure: endpoints not preserved");
  int new_cost = path_cost(g, refined, current);
  PAIRSPAN_CHECK(new_cost <= x, "refine_pure: cost exceeds prefix+suffix bound");
  return {std::move(refined), cp.rung + 1, new_cost};
}

void assert_pure_invariants(const CandidatePath& cp, int d_g, const Clustering& cl,
                            double n1mb, double gamma) {
  PAIRSPAN_CHECK(cp.path.length() <= d_g + 4 * cp.rung,
                 "ladder invariant (i) violated");
  std::vector<int> count(cl.num_clusters(), 0);
  for (Node v : cp.path.vertices) {
    int cid = cl.cluster_of[v];
    if (cid >= 0) PAIRSPAN_CHECK(++count[cid] <= 3, "ladder invariant (ii) violated");
  }
  long double bound = 2.0L * static_cast<long double>(n1mb) /
                      powl(static_cast<long double>(gamma), cp.rung);
  PAIRSPAN_CHECK(static_cast<long double>(cp.cost) <= bound + 1e-6L,
                 "ladder invariant (iii) violated");
}

}  // namespace

double pure_additive_default_beta(int n, int num_pairs, int k) {
  if (n <= 1) return 0.0;
  double ln_n = std::log(static_cast<double>(n));
  double big_n = static_cast<double>(std::max(num_pairs, 1));
  double beta = (static_cast<double>(k) / (2.0 * k + 1.0)) *
                (std::log(6.0) + ln_n / k + 0.5 * std::log((4.0 * k + 5.0) * big_n)) /
                ln_n;
  return std::clamp(beta, 0.0, 1.0);
}

std::pair<int, int> find_max_span_pair(const Graph& g, const Path& p,
                                       const Clustering& cl,
                                       const EdgeSet& current) {
  SpanSearch s = make_span_search(g, p, cl, current);
  if (s.idx.positions.size() < 2)
    throw std::invalid_argument("find_max_span_pair: needs two clustered vertices");
  return max_span_pair(s);
}

CandidatePath refine_pure(const Graph& g, const CandidatePath& cp,
                          std::pair<Node, Node> endpoints, const Clustering& cl,
                          const ClusterGraph& cg, const EdgeSet& current,
                          double gamma) {
  PAIRSPAN_CHECK(cp.path.front() == endpoints.first && cp.path.back() == endpoints.second,
                 "refine_pure: endpoint mismatch");
  return refine_pure_impl(g, cp, cl, cg, current, gamma);
}

std::pair<Spanner, BuyLedger> build_pairwise_pure(const Graph& g,
                                                  const PureAdditiveParams& params) {
  if (params.k < 1) throw std::invalid_argument("pairwise_pure: k must be >= 1");
  for (const auto& [s, t] : params.pairs) {
    g.check_node(s, "pair endpoint");
    g.check_node(t, "pair endpoint");
  }
  const int n = g.num_nodes();
  const int k = params.k;
  const int num_pairs = static_cast<int>(params.pairs.size());
  const double beta =
      params.beta.value_or(pure_additive_default_beta(n, num_pairs, k));
  const double gamma = ladder_gamma(n, beta, k);
  const double n1mb = real_npow(n, 1.0 - beta);

  auto [cl, cg] = build_clustering(g, beta);
  EdgeSet current = cg.edges;
  const EdgeSet all = g.full_edge_set();

  Spanner spanner;
  spanner.clustering_edges = current.size();

  BuyLedger ledger;
  ledger.kind = Construction::pairwise_pure;
  ledger.n = n;
  ledger.num_pairs = num_pairs;
  ledger.k = k;
  ledger.beta = beta;
  ledger.gamma = gamma;

  for (const auto& [ps, pt] : params.pairs) {
    PathRecord rec;
    rec.u = ps;
    rec.v = pt;
    if (ps == pt) {
      rec.bought = true;
      ledger.records.push_back(rec);
      continue;
    }
    auto sp = shortest_path(g, all, ps, pt);
    if (!sp) {
      rec.reachable = false;
      ledger.records.push_back(rec);
      continue;
    }
    const int d_g = sp->length();
    CandidatePath cp{std::move(*sp), 0, 0};
    cp.cost = path_cost(g, cp.path, current);
    PAIRSPAN_CHECK(cp.cost <= 2 * cl.num_clusters(),
                   "pairwise_pure: rung-0 cost exceeds twice the cluster count");
    for (;;) {
      assert_pure_invariants(cp, d_g, cl, n1mb, gamma);
      detail::ClusterPairValue cpv =
          detail::cluster_pair_value(g, cp.path, cl, current);
      if (static_cast<long double>(cp.cost) <=
          6.0L * static_cast<long double>(gamma) *
              sqrtl(static_cast<long double>(cpv.value))) {
        if (cp.rung == k)
          PAIRSPAN_CHECK(cp.cost == 0, "pairwise_pure: nonzero cost at rung k");
        rec.bought = true;
        rec.rung = cp.rung;
        rec.cost = cp.cost;
        rec.value = cpv.value;
        for (std::size_t e = 0; e + 1 < cp.path.vertices.size(); ++e) {
          int eid = g.edge_index(cp.path.vertices[e], cp.path.vertices[e + 1]);
          if (current.insert(eid)) ++rec.edges_added;
        }
        ledger.sum_cost_bought += rec.cost;
        ledger.sum_value_bought += rec.value;
        for (const auto& [c1, c2] : cpv.contributors)
          ledger.note_contribution(static_cast<std::uint32_t>(c1),
                                   static_cast<std::uint32_t>(c2));
        spanner.bought_edges += rec.edges_added;
        ledger.max_rung = std::max(ledger.max_rung, cp.rung);
        break;
      }
      PAIRSPAN_CHECK(cp.rung < k, "pairwise_pure: ladder exceeded k rungs");
      cp = refine_pure_impl(g, cp, cl, cg, current, gamma);
    }
    ledger.records.push_back(rec);
  }

  spanner.edges = std::move(current);
  return {std::move(spanner), std::move(ledger)};
}

}  // namespace pairspan
