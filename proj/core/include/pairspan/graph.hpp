#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pairspan/common.hpp"

namespace pairspan {

class EdgeSet;

/// Simple undirected unweighted graph over nodes 0..n-1, stored as sorted
/// adjacency lists. Every undirected edge carries a dense edge id assigned
/// in lexicographic (u,v) order with u < v; subgraphs are bitmaps over
/// those ids (see EdgeSet).
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Endpoints may be given in either order;
  /// self-loops and duplicate edges are rejected.
  Graph(int n, std::vector<std::pair<Node, Node>> edges);

  int num_nodes() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  /// Neighbors of u in ascending id order.
  std::span<const Node> neighbors(Node u) const;
  /// Edge ids parallel to neighbors(u).
  std::span<const int> incident_edge_ids(Node u) const;

  int degree(Node u) const { return static_cast<int>(neighbors(u).size()); }

  /// Id of edge {u,v}, or -1 when the edge is absent.
  int edge_index(Node u, Node v) const;
  bool has_edge(Node u, Node v) const { return edge_index(u, v) >= 0; }

  /// Canonical endpoints (u < v) of the edge with the given id.
  std::pair<Node, Node> edge(int edge_id) const { return edges_[edge_id]; }

  EdgeSet empty_edge_set() const;
  EdgeSet full_edge_set() const;

  void check_node(Node u, const char* what) const;

 private:
  int n_ = 0;
  std::vector<std::pair<Node, Node>> edges_;  // sorted lexicographic, u < v
  std::vector<int> offsets_;                  // CSR offsets, size n+1
  std::vector<Node> adj_;                     // neighbor ids
  std::vector<int> adj_edge_ids_;             // edge id per adjacency slot
};

/// Membership bitmap over the edge ids of one host graph. All subgraphs
/// (spanners under construction, cluster graphs, restrictions) are EdgeSets.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int edge_capacity) : bits_(edge_capacity, false) {}

  bool contains(int edge_id) const { return bits_[edge_id]; }
  bool contains(const Graph& g, Node u, Node v) const;

  /// Returns true when the edge was newly added.
  bool insert(int edge_id);

  int size() const { return size_; }
  int capacity() const { return static_cast<int>(bits_.size()); }

  /// True when every edge of this set is also in `other`.
  bool subset_of(const EdgeSet& other) const;

  std::vector<std::pair<Node, Node>> to_edge_list(const Graph& g) const;

 private:
  std::vector<bool> bits_;
  int size_ = 0;
};

/// Hop distances from a source node (or node set), with an explicit
/// marker for unreachable nodes.
struct DistanceRow {
  static constexpr int kUnreachable = -1;

  std::vector<Node> sources;
  std::vector<int> dist;

  bool reached(Node v) const { return dist[v] != kUnreachable; }
  int at(Node v) const { return dist[v]; }
};

/// Simple path v_0..v_l; length() is the edge count l.
struct Path {
  std::vector<Node> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  Node front() const { return vertices.front(); }
  Node back() const { return vertices.back(); }
};

/// Exact hop distances from `source` in the subgraph (V, restrict).
DistanceRow bfs_distances(const Graph& g, const EdgeSet& restrict, Node source);

/// dist(v) = min over s in sources of the single-source distance.
DistanceRow multi_source_bfs(const Graph& g, const EdgeSet& restrict,
                             std::span<const Node> sources);

/// Deterministic shortest u-v path in (V, restrict): walking back from v,
/// each step goes to the smallest-id neighbor one hop closer to the source.
/// Returns nullopt when u and v are disconnected.
std::optional<Path> shortest_path(const Graph& g, const EdgeSet& restrict,
                                  Node u, Node v);

/// Rebuilds the deterministic path ending at `target` from a distance row
/// (same tie-breaking as shortest_path). Target must be reached.
Path extract_path(const Graph& g, const EdgeSet& restrict,
                  const DistanceRow& row, Node target);

/// Number of edges of p that are absent from `have`.
int path_cost(const Graph& g, const Path& p, const EdgeSet& have);

/// Turns a walk (consecutive vertices adjacent, revisits allowed) into a
/// simple path with the same endpoints by removing every cycle between a
/// vertex's first and later occurrence. Never lengthens the walk.
Path splice_simple(const Graph& g, const std::vector<Node>& walk);

}  // namespace pairspan
