#include "pairspan/pairwise_near.hpp"

#include <algorithm>
#include <cmath>

#include "pairspan/mult_spanner.hpp"
#include "path_value.hpp"

namespace pairspan {

double near_additive_default_beta(int n, int num_pairs, double epsilon) {
  if (n <= 1) return 0.0;
  double arg = std::sqrt(static_cast<double>(std::max(num_pairs, 1))) *
               std::log2(static_cast<double>(n)) / epsilon;
  if (arg <= 1.0) return 0.0;
  double beta = std::log(arg) / (2.0 * std::log(static_cast<double>(n)));
  return std::clamp(beta, 0.0, 1.0);
}

int value_cluster_pairs(const Graph& g, const Path& p, const Clustering& cl,
                        const EdgeSet& current, ClusterPairMode mode) {
  int unordered = detail::cluster_pair_value(g, p, cl, current).value;
  return mode == ClusterPairMode::unordered_pairs ? unordered : 2 * unordered;
}

std::pair<Spanner, BuyLedger> build_pairwise_near(const Graph& g,
                                                  const NearAdditiveParams& params) {
  if (!(params.epsilon > 0.0))
    throw std::invalid_argument("pairwise_near: epsilon must be positive");
  for (const auto& [s, t] : params.pairs) {
    g.check_node(s, "pair endpoint");
    g.check_node(t, "pair endpoint");
  }
  const int n = g.num_nodes();
  const int num_pairs = static_cast<int>(params.pairs.size());

  BuyLedger ledger;
  ledger.kind = Construction::pairwise_near;
  ledger.n = n;
  ledger.num_pairs = num_pairs;
  ledger.epsilon = params.epsilon;

  Spanner spanner;

  // log2(1) = 0 would zero the buy threshold; tiny graphs keep everything.
  if (n <= 2) {
    spanner.edges = g.full_edge_set();
    spanner.clustering_edges = spanner.edges.size();
    ledger.beta = 1.0;
    return {std::move(spanner), std::move(ledger)};
  }

  const double beta =
      params.beta.value_or(near_additive_default_beta(n, num_pairs, params.epsilon));
  ledger.beta = beta;

  auto [cl, cg] = build_clustering(g, beta);
  EdgeSet current = cg.edges;
  const EdgeSet all = g.full_edge_set();
  spanner.clustering_edges = current.size();

  const long double threshold_coef =
      12.0L * static_cast<long double>(std::log2(static_cast<double>(n))) /
      static_cast<long double>(params.epsilon);

  for (const auto& [s, t] : params.pairs) {
    PathRecord rec;
    rec.u = s;
    rec.v = t;
    if (s == t) {
      rec.bought = true;
      ledger.records.push_back(rec);
      continue;
    }
    auto p = shortest_path(g, all, s, t);
    if (!p) {
      rec.reachable = false;
      ledger.records.push_back(rec);
      continue;
    }
    rec.cost = path_cost(g, *p, current);
    detail::ClusterPairValue cpv = detail::cluster_pair_value(g, *p, cl, current);
    rec.value = cpv.value;
    rec.bought = static_cast<long double>(rec.cost) <=
                 threshold_coef * sqrtl(static_cast<long double>(rec.value));
    if (rec.bought) {
      for (std::size_t e = 0; e + 1 < p->vertices.size(); ++e) {
        int eid = g.edge_index(p->vertices[e], p->vertices[e + 1]);
        if (current.insert(eid)) ++rec.edges_added;
      }
      ledger.sum_cost_bought += rec.cost;
      ledger.sum_value_bought += rec.value;
      for (const auto& [c1, c2] : cpv.contributors)
        ledger.note_contribution(static_cast<std::uint32_t>(c1),
                                 static_cast<std::uint32_t>(c2));
      spanner.bought_edges += rec.edges_added;
    }
    ledger.records.push_back(rec);
  }

  EdgeSet mult = log_stretch_spanner(g);
  for (int eid = 0; eid < g.num_edges(); ++eid)
    if (mult.contains(eid) && current.insert(eid)) ++spanner.phase3_edges;

  spanner.edges = std::move(current);
  return {std::move(spanner), std::move(ledger)};
}

}  // namespace pairspan
