#pragma once

#include <utility>
#include <vector>

#include "pairspan/graph.hpp"

namespace pairspan {

struct Cluster {
  Node center;                // adjacent in G to every member; not a member itself
  std::vector<Node> members;  // ascending
};

/// Partition of a node subset into centered clusters of exactly
/// ceil(n^beta) members each. Nodes outside every cluster are unclustered.
struct Clustering {
  std::vector<Cluster> clusters;
  std::vector<int> cluster_of;  // per node; -1 = unclustered
  double beta = 0.0;
  int size_threshold = 0;  // ceil(n^beta)

  int num_clusters() const { return static_cast<int>(clusters.size()); }
};

/// The retained-edge subgraph: all intra-cluster and cluster-center edges
/// plus every edge incident to an unclustered node. Absent edges always
/// join two different clusters, and co-members are within 2 hops.
struct ClusterGraph {
  EdgeSet edges;
};

/// Greedy clustering: while some vertex has >= ceil(n^beta) unclustered
/// neighbors, the smallest-id such vertex becomes a center and its
/// smallest-id unclustered neighbors form a cluster. Deterministic.
std::pair<Clustering, ClusterGraph> build_clustering(const Graph& g, double beta);

/// Rewrites p so that no cluster holds more than 3 of its vertices, by
/// detouring through cluster centers (edges of cg only, so the cost of p
/// against any superset of cg never increases). Never lengthens p.
Path repair_multiplicity(const Graph& g, const Path& p, const Clustering& cl,
                         const ClusterGraph& cg, const EdgeSet& have);

}  // namespace pairspan
