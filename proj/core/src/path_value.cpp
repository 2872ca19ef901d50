#include "path_value.hpp"

#include <algorithm>
#include <cstdlib>

namespace pairspan::detail {

TouchingClusters touching_clusters(const Path& p, const Clustering& cl) {
  std::unordered_map<int, std::vector<int>> by_cid;
  for (int i = 0; i < static_cast<int>(p.vertices.size()); ++i) {
    int cid = cl.cluster_of[p.vertices[i]];
    if (cid >= 0) by_cid[cid].push_back(i);
  }
  TouchingClusters out;
  out.cids.reserve(by_cid.size());
  for (const auto& [cid, pos] : by_cid) out.cids.push_back(cid);
  std::sort(out.cids.begin(), out.cids.end());
  out.positions.reserve(out.cids.size());
  for (int cid : out.cids) out.positions.push_back(std::move(by_cid[cid]));
  return out;
}

int min_row_over(const DistanceRow& row, const std::vector<Node>& targets) {
  int best = kInfDist;
  for (Node t : targets)
    if (row.reached(t)) best = std::min(best, row.at(t));
  return best;
}

int min_position_gap(const std::vector<int>& a, const std::vector<int>& b) {
  int best = kInfDist;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    best = std::min(best, std::abs(a[i] - b[j]));
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return best;
}

const DistanceRow& ClusterRowCache::row(int cid) {
  auto it = rows_.find(cid);
  if (it == rows_.end()) {
    it = rows_.emplace(cid, multi_source_bfs(g_, current_, cl_.clusters[cid].members))
             .first;
  }
  return it->second;
}

ClusterPairValue cluster_pair_value(const Graph& g, const Path& p,
                                    const Clustering& cl, const EdgeSet& current) {
  ClusterPairValue out;
  TouchingClusters touch = touching_clusters(p, cl);
  const int t = static_cast<int>(touch.cids.size());
  if (t < 2) return out;
  ClusterRowCache cache(g, cl, current);
  for (int i = 0; i < t; ++i) {
    const DistanceRow& row_i = cache.row(touch.cids[i]);
    for (int j = i + 1; j < t; ++j) {
      int d_path = min_position_gap(touch.positions[i], touch.positions[j]);
      int d_cur = min_row_over(row_i, cl.clusters[touch.cids[j]].members);
      if (d_path < d_cur) {
        ++out.value;
        out.contributors.emplace_back(touch.cids[i], touch.cids[j]);
      }
    }
  }
  return out;
}

std::vector<int> absent_edge_positions(const Graph& g, const Path& p,
                                       const EdgeSet& have) {
  std::vector<int> out;
  for (int i = 0; i + 1 < static_cast<int>(p.vertices.size()); ++i) {
    int eid = g.edge_index(p.vertices[i], p.vertices[i + 1]);
    PAIRSPAN_CHECK(eid >= 0, "absent_edge_positions: invalid path");
    if (!have.contains(eid)) out.push_back(i);
  }
  return out;
}

}  // namespace pairspan::detail
