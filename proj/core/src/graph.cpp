#include "pairspan/graph.hpp"

#include <algorithm>

namespace pairspan {

Graph::Graph(int n, std::vector<std::pair<Node, Node>> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph: negative node count");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("graph: self-loop");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) throw std::invalid_argument("graph: endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("graph: duplicate edge");
  edges_ = std::move(edges);

  std::vector<int> deg(n_, 0);
  for (const auto& [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(n_ + 1, 0);
  for (Node u = 0; u < n_; ++u) offsets_[u + 1] = offsets_[u] + deg[u];
  adj_.resize(offsets_[n_]);
  adj_edge_ids_.resize(offsets_[n_]);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (u,v); appending v to u's slots in edge-id order
  // leaves each "u < v" block sorted, and likewise for the reverse
  // direction, but the two blocks interleave, so sort each list once.
  for (int eid = 0; eid < num_edges(); ++eid) {
    const auto& [u, v] = edges_[eid];
    adj_[fill[u]] = v;
    adj_edge_ids_[fill[u]++] = eid;
    adj_[fill[v]] = u;
    adj_edge_ids_[fill[v]++] = eid;
  }
  std::vector<std::pair<Node, int>> tmp;
  for (Node u = 0; u < n_; ++u) {
    tmp.clear();
    for (int i = offsets_[u]; i < offsets_[u + 1]; ++i)
      tmp.emplace_back(adj_[i], adj_edge_ids_[i]);
    std::sort(tmp.begin(), tmp.end());
    for (int i = offsets_[u]; i < offsets_[u + 1]; ++i) {
      adj_[i] = tmp[i - offsets_[u]].first;
      adj_edge_ids_[i] = tmp[i - offsets_[u]].second;
    }
  }
}

std::span<const Node> Graph::neighbors(Node u) const {
  return {adj_.data() + offsets_[u], adj_.data() + offsets_[u + 1]};
}

std::span<const int> Graph::incident_edge_ids(Node u) const {
  return {adj_edge_ids_.data() + offsets_[u], adj_edge_ids_.data() + offsets_[u + 1]};
}

int Graph::edge_index(Node u, Node v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return -1;
  return incident_edge_ids(u)[it - nb.begin()];
}

EdgeSet Graph::empty_edge_set() const { return EdgeSet(num_edges()); }

EdgeSet Graph::full_edge_set() const {
  EdgeSet s(num_edges());
  for (int eid = 0; eid < num_edges(); ++eid) s.insert(eid);
  return s;
}

void Graph::check_node(Node u, const char* what) const {
  if (u < 0 || u >= n_)
    throw std::invalid_argument(std::string(what) + ": node out of range");
}

bool EdgeSet::contains(const Graph& g, Node u, Node v) const {
  int eid = g.edge_index(u, v);
  return eid >= 0 && contains(eid);
}

bool EdgeSet::insert(int edge_id) {
  if (bits_[edge_id]) return false;
  bits_[edge_id] = true;
  ++size_;
  return true;
}

bool EdgeSet::subset_of(const EdgeSet& other) const {
  if (capacity() != other.capacity()) return false;
  for (int eid = 0; eid < capacity(); ++eid)
    if (bits_[eid] && !other.bits_[eid]) return false;
  return true;
}

std::vector<std::pair<Node, Node>> EdgeSet::to_edge_list(const Graph& g) const {
  std::vector<std::pair<Node, Node>> out;
  out.reserve(size_);
  for (int eid = 0; eid < capacity(); ++eid)
    if (bits_[eid]) out.push_back(g.edge(eid));
  return out;
}

namespace {

DistanceRow bfs_core(const Graph& g, const EdgeSet& restrict,
                     std::span<const Node> sources) {
  if (restrict.capacity() != g.num_edges())
    throw std::invalid_argument("bfs: edge set belongs to a different graph");
  DistanceRow row;
  row.sources.assign(sources.begin(), sources.end());
  row.dist.assign(g.num_nodes(), DistanceRow::kUnreachable);
  std::vector<Node> queue;
  queue.reserve(g.num_nodes());
  for (Node s : sources) {
    g.check_node(s, "bfs source");
    if (row.dist[s] != 0) {
      row.dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Node u = queue[head];
    auto nb = g.neighbors(u);
    auto ids = g.incident_edge_ids(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (!restrict.contains(ids[i])) continue;
      Node v = nb[i];
      if (row.dist[v] == DistanceRow::kUnreachable) {
        row.dist[v] = row.dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return row;
}

}  // namespace

DistanceRow bfs_distances(const Graph& g, const EdgeSet& restrict, Node source) {
  g.check_node(source, "bfs_distances");
  Node src[1] = {source};
  return bfs_core(g, restrict, src);
}

DistanceRow multi_source_bfs(const Graph& g, const EdgeSet& restrict,
                             std::span<const Node> sources) {
  if (sources.empty())
    throw std::invalid_argument("multi_source_bfs: empty source set");
  return bfs_core(g, restrict, sources);
}

Path extract_path(const Graph& g, const EdgeSet& restrict,
                  const DistanceRow& row, Node target) {
  PAIRSPAN_CHECK(row.reached(target), "extract_path: target not reached");
  std::vector<Node> rev;
  Node cur = target;
  rev.push_back(cur);
  while (row.dist[cur] > 0) {
    auto nb = g.neighbors(cur);
    auto ids = g.incident_edge_ids(cur);
    Node parent = -1;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (restrict.contains(ids[i]) && row.dist[nb[i]] == row.dist[cur] - 1) {
        parent = nb[i];  // neighbors ascend, so the first hit is smallest
        break;
      }
    }
    PAIRSPAN_CHECK(parent >= 0, "extract_path: broken distance row");
    rev.push_back(parent);
    cur = parent;
  }
  std::reverse(rev.begin(), rev.end());
  return Path{std::move(rev)};
}

std::optional<Path> shortest_path(const Graph& g, const EdgeSet& restrict,
                                  Node u, Node v) {
  g.check_node(u, "shortest_path");
  g.check_node(v, "shortest_path");
  DistanceRow row = bfs_distances(g, restrict, u);
  if (!row.reached(v)) return std::nullopt;
  return extract_path(g, restrict, row, v);
}

int path_cost(const Graph& g, const Path& p, const EdgeSet& have) {
  int cost = 0;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    int eid = g.edge_index(p.vertices[i], p.vertices[i + 1]);
    if (eid < 0) throw std::invalid_argument("path_cost: path edge not in graph");
    if (!have.contains(eid)) ++cost;
  }
  return cost;
}

Path splice_simple(const Graph& g, const std::vector<Node>& walk) {
  if (walk.empty()) throw std::invalid_argument("splice_simple: empty walk");
  for (std::size_t i = 0; i + 1 < walk.size(); ++i)
    if (g.edge_index(walk[i], walk[i + 1]) < 0)
      throw std::invalid_argument("splice_simple: consecutive vertices not adjacent");

  std::vector<int> pos(g.num_nodes(), -1);
  std::vector<Node> stack;
  stack.reserve(walk.size());
  for (Node w : walk) {
    if (pos[w] >= 0) {
      while (static_cast<int>(stack.size()) > pos[w] + 1) {
        pos[stack.back()] = -1;
        stack.pop_back();
      }
    } else {
      pos[w] = static_cast<int>(stack.size());
      stack.push_back(w);
    }
  }
  return Path{std::move(stack)};
}

}  // namespace pairspan
