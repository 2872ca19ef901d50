#pragma once

// Internal helpers shared by the path-buying constructions. Not installed.

#include <climits>
#include <unordered_map>
#include <vector>

#include "pairspan/clustering.hpp"
#include "pairspan/graph.hpp"

namespace pairspan::detail {

inline constexpr int kInfDist = INT_MAX;

/// Clusters touching a path, with the sorted on-path positions of their
/// vertices. cids ascend.
struct TouchingClusters {
  std::vector<int> cids;
  std::vector<std::vector<int>> positions;  // parallel to cids

  int index_of(int cid) const {
    for (std::size_t i = 0; i < cids.size(); ++i)
      if (cids[i] == cid) return static_cast<int>(i);
    return -1;
  }
};

TouchingClusters touching_clusters(const Path& p, const Clustering& cl);

/// min over `targets` of row.dist, kInfDist when none is reached.
int min_row_over(const DistanceRow& row, const std::vector<Node>& targets);

/// min |a-b| over two ascending position lists.
int min_position_gap(const std::vector<int>& a, const std::vector<int>& b);

/// Lazily computed multi-source BFS rows from cluster member sets over a
/// fixed edge set. Valid only while `current` is unchanged.
class ClusterRowCache {
 public:
  ClusterRowCache(const Graph& g, const Clustering& cl, const EdgeSet& current)
      : g_(g), cl_(cl), current_(current) {}

  const DistanceRow& row(int cid);

 private:
  const Graph& g_;
  const Clustering& cl_;
  const EdgeSet& current_;
  std::unordered_map<int, DistanceRow> rows_;
};

/// Cluster-pair value of a path (the unordered convention): pairs of
/// distinct touching clusters whose along-path distance beats their
/// distance in `current`.
struct ClusterPairValue {
  int value = 0;
  std::vector<std::pair<int, int>> contributors;  // (min cid, max cid)
};

ClusterPairValue cluster_pair_value(const Graph& g, const Path& p,
                                    const Clustering& cl, const EdgeSet& current);

/// Positions (indices into p.vertices) of the absent edges of p, identified
/// by the index of the edge's left endpoint.
std::vector<int> absent_edge_positions(const Graph& g, const Path& p,
                                       const EdgeSet& have);

}  // namespace pairspan::detail
