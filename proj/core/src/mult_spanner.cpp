#include "pairspan/mult_spanner.hpp"

#include <vector>

namespace pairspan {

namespace {

// BFS from u in (V, h) cut off at `limit` hops; true iff dist(u,v) <= limit.
bool within_hops(const Graph& g, const EdgeSet& h, Node u, Node v, int limit,
                 std::vector<int>& dist, std::vector<Node>& queue) {
  if (u == v) return true;
  dist.assign(g.num_nodes(), -1);
  queue.clear();
  dist[u] = 0;
  queue.push_back(u);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Node x = queue[head];
    if (dist[x] == limit) continue;
    auto nb = g.neighbors(x);
    auto ids = g.incident_edge_ids(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (!h.contains(ids[i]) || dist[nb[i]] >= 0) continue;
      if (nb[i] == v) return true;
      dist[nb[i]] = dist[x] + 1;
      queue.push_back(nb[i]);
    }
  }
  return false;
}

}  // namespace

EdgeSet greedy_mult_spanner(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("greedy_mult_spanner: k must be >= 1");
  EdgeSet h = g.empty_edge_set();
  std::vector<int> dist;
  std::vector<Node> queue;
  for (int eid = 0; eid < g.num_edges(); ++eid) {
    auto [u, v] = g.edge(eid);
    if (!within_hops(g, h, u, v, 2 * k - 1, dist, queue)) h.insert(eid);
  }
  return h;
}

EdgeSet log_stretch_spanner(const Graph& g) {
  if (g.num_nodes() < 2) return g.empty_edge_set();
  return greedy_mult_spanner(g, ceil_log2(g.num_nodes()));
}

}  // namespace pairspan
