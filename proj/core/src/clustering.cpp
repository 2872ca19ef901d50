#include "pairspan/clustering.hpp"

#include <algorithm>

namespace pairspan {

std::pair<Clustering, ClusterGraph> build_clustering(const Graph& g, double beta) {
  if (!(beta >= 0.0 && beta <= 1.0))
    throw std::invalid_argument("build_clustering: beta must be in [0,1]");
  const int n = g.num_nodes();

  Clustering cl;
  cl.beta = beta;
  cl.size_threshold = n > 0 ? ceil_npow(n, beta) : 1;
  cl.cluster_of.assign(n, -1);
  ClusterGraph cg{g.empty_edge_set()};

  std::vector<char> unclustered(n, 1);
  std::vector<int> ucount(n, 0);  // unclustered neighbors per node
  for (Node u = 0; u < n; ++u) ucount[u] = g.degree(u);

  std::vector<char> in_set(n, 0);
  for (;;) {
    Node center = -1;
    for (Node v = 0; v < n; ++v) {
      if (ucount[v] >= cl.size_threshold) {
        center = v;
        break;
      }
    }
    if (center < 0) break;

    Cluster c;
    c.center = center;
    for (Node w : g.neighbors(center)) {
      if (unclustered[w]) {
        c.members.push_back(w);
        if (static_cast<int>(c.members.size()) == cl.size_threshold) break;
      }
    }
    const int cid = cl.num_clusters();
    for (Node m : c.members) {
      cl.cluster_of[m] = cid;
      unclustered[m] = 0;
      for (Node w : g.neighbors(m)) --ucount[w];
    }

    // All G-edges inside members + center go to the cluster graph.
    in_set[center] = 1;
    for (Node m : c.members) in_set[m] = 1;
    auto scan = [&](Node a) {
      auto nb = g.neighbors(a);
      auto ids = g.incident_edge_ids(a);
      for (std::size_t i = 0; i < nb.size(); ++i)
        if (a < nb[i] && in_set[nb[i]]) cg.edges.insert(ids[i]);
    };
    scan(center);
    for (Node m : c.members) scan(m);
    in_set[center] = 0;
    for (Node m : c.members) in_set[m] = 0;

    cl.clusters.push_back(std::move(c));
  }

  // Everything touching a still-unclustered node is kept.
  for (Node u = 0; u < n; ++u) {
    if (!unclustered[u]) continue;
    for (int eid : g.incident_edge_ids(u)) cg.edges.insert(eid);
  }
  return {std::move(cl), std::move(cg)};
}

Path repair_multiplicity(const Graph& g, const Path& p, const Clustering& cl,
                         const ClusterGraph& cg, const EdgeSet& have) {
  PAIRSPAN_CHECK(cg.edges.subset_of(have), "repair_multiplicity: have must contain cg");
  Path cur = p;
  std::vector<int> count(cl.num_clusters(), 0);
  for (;;) {
    std::fill(count.begin(), count.end(), 0);
    for (Node v : cur.vertices) {
      int cid = cl.cluster_of[v];
      if (cid >= 0) ++count[cid];
    }
    int bad = -1;
    for (int cid = 0; cid < cl.num_clusters(); ++cid) {
      if (count[cid] >= 4) {
        bad = cid;
        break;
      }
    }
    if (bad < 0) break;

    int first = -1, last = -1;
    for (int i = 0; i < static_cast<int>(cur.vertices.size()); ++i) {
      if (cl.cluster_of[cur.vertices[i]] == bad) {
        if (first < 0) first = i;
        last = i;
      }
    }
    // >= 4 occurrences means last - first >= 3, so the detour shortens.
    std::vector<Node> walk(cur.vertices.begin(), cur.vertices.begin() + first + 1);
    walk.push_back(cl.clusters[bad].center);
    walk.insert(walk.end(), cur.vertices.begin() + last, cur.vertices.end());
    Path next = splice_simple(g, walk);
    PAIRSPAN_CHECK(next.length() < cur.length(), "repair_multiplicity: no progress");
    cur = std::move(next);
  }
  return cur;
}

}  // namespace pairspan
