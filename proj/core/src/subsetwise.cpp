#include "pairspan/subsetwise.hpp"

#include <algorithm>
#include <cmath>

#include "path_value.hpp"

namespace pairspan {

namespace {

struct EndpointValue {
  int value = 0;
  std::vector<std::pair<Node, int>> contributors;  // (endpoint, cid)
};

// value against precomputed endpoint rows in `current`.
EndpointValue endpoint_value(const Path& p, Node u, Node v, const Clustering& cl,
                             const DistanceRow& row_u, const DistanceRow& row_v) {
  EndpointValue out;
  detail::TouchingClusters touch = detail::touching_clusters(p, cl);
  const int len = p.length();
  for (std::size_t i = 0; i < touch.cids.size(); ++i) {
    const int cid = touch.cids[i];
    const auto& members = cl.clusters[cid].members;
    const int d_path_u = touch.positions[i].front();
    const int d_path_v = len - touch.positions[i].back();
    if (detail::min_row_over(row_u, members) > d_path_u) {
      ++out.value;
      out.contributors.emplace_back(u, cid);
    }
    if (detail::min_row_over(row_v, members) > d_path_v) {
      ++out.value;
      out.contributors.emplace_back(v, cid);
    }
  }
  return out;
}

std::vector<Node> normalize_sources(const Graph& g, std::vector<Node> s) {
  if (s.empty()) throw std::invalid_argument("S must be nonempty");
  for (Node u : s) g.check_node(u, "source set");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

double subsetwise_default_beta(int n, int s_size) {
  if (n <= 1) return 0.0;
  double beta = 0.5 * std::log(static_cast<double>(s_size)) /
                std::log(static_cast<double>(n));
  return std::clamp(beta, 0.0, 1.0);
}

int value_subsetwise(const Graph& g, const Path& p,
                     std::pair<Node, Node> endpoints, const Clustering& cl,
                     const EdgeSet& current) {
  DistanceRow row_u = bfs_distances(g, current, endpoints.first);
  DistanceRow row_v = bfs_distances(g, current, endpoints.second);
  return endpoint_value(p, endpoints.first, endpoints.second, cl, row_u, row_v)
      .value;
}

std::pair<Spanner, BuyLedger> build_subsetwise(const Graph& g,
                                               const SubsetwiseParams& params) {
  const std::vector<Node> s = normalize_sources(g, params.sources);
  const double beta =
      params.beta.value_or(subsetwise_default_beta(g.num_nodes(), s.size()));

  auto [cl, cg] = build_clustering(g, beta);
  EdgeSet current = cg.edges;
  const EdgeSet all = g.full_edge_set();

  Spanner spanner;
  spanner.clustering_edges = current.size();

  BuyLedger ledger;
  ledger.kind = Construction::subsetwise;
  ledger.n = g.num_nodes();
  ledger.set_size = static_cast<int>(s.size());
  ledger.beta = beta;

  // Endpoint rows in the current spanner, invalidated whenever a buy
  // actually adds edges.
  std::uint64_t version = 0;
  std::unordered_map<Node, std::pair<std::uint64_t, DistanceRow>> row_cache;
  auto current_row = [&](Node x) -> const DistanceRow& {
    auto it = row_cache.find(x);
    if (it == row_cache.end() || it->second.first != version) {
      DistanceRow row = bfs_distances(g, current, x);
      it = row_cache.insert_or_assign(x, std::make_pair(version, std::move(row)))
               .first;
    }
    return it->second.second;
  };

  std::unordered_map<Node, DistanceRow> g_rows;  // rows in G, per source
  auto g_row = [&](Node x) -> const DistanceRow& {
    auto it = g_rows.find(x);
    if (it == g_rows.end()) it = g_rows.emplace(x, bfs_distances(g, all, x)).first;
    return it->second;
  };

  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const Node u = s[i], v = s[j];
      ++ledger.num_pairs;
      PathRecord rec;
      rec.u = u;
      rec.v = v;
      const DistanceRow& in_g = g_row(u);
      if (!in_g.reached(v)) {
        rec.reachable = false;
        ledger.records.push_back(rec);
        continue;
      }
      Path p = extract_path(g, all, in_g, v);
      rec.cost = path_cost(g, p, current);
      EndpointValue ev =
          endpoint_value(p, u, v, cl, current_row(u), current_row(v));
      rec.value = ev.value;
      rec.bought = rec.cost <= 2 * rec.value;
      if (rec.bought) {
        for (std::size_t e = 0; e + 1 < p.vertices.size(); ++e) {
          int eid = g.edge_index(p.vertices[e], p.vertices[e + 1]);
          if (current.insert(eid)) ++rec.edges_added;
        }
        if (rec.edges_added > 0) ++version;
        ledger.sum_cost_bought += rec.cost;
        ledger.sum_value_bought += rec.value;
        for (const auto& [x, cid] : ev.contributors)
          ledger.note_contribution(static_cast<std::uint32_t>(x),
                                   static_cast<std::uint32_t>(cid));
        spanner.bought_edges += rec.edges_added;
      }
      ledger.records.push_back(rec);
    }
  }

  spanner.edges = std::move(current);
  return {std::move(spanner), std::move(ledger)};
}

}  // namespace pairspan
