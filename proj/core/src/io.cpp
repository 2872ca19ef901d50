#include "pairspan/io.hpp"

#include <fstream>
#include <sstream>

namespace pairspan {

namespace {

// Next payload line, skipping blanks and '#' comments.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

std::vector<std::pair<Node, Node>> read_edge_lines(std::istream& in, int n, int m) {
  std::vector<std::pair<Node, Node>> edges;
  edges.reserve(m);
  std::string line;
  std::pair<Node, Node> prev{-1, -1};
  for (int i = 0; i < m; ++i) {
    if (!next_line(in, line)) throw std::runtime_error("graph file: missing edge line");
    std::istringstream ls(line);
    Node u, v;
    if (!(ls >> u >> v)) throw std::runtime_error("graph file: bad edge line '" + line + "'");
    if (!(0 <= u && u < v && v < n))
      throw std::runtime_error("graph file: edge out of range '" + line + "'");
    std::pair<Node, Node> cur{u, v};
    if (!(prev < cur))
      throw std::runtime_error("graph file: edges not in ascending order at '" + line + "'");
    prev = cur;
    edges.push_back(cur);
  }
  return edges;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw std::runtime_error("graph file: empty");
  std::istringstream header(line);
  int n, m;
  if (!(header >> n >> m) || n < 0 || m < 0)
    throw std::runtime_error("graph file: bad header '" + line + "'");
  return Graph(n, read_edge_lines(in, n, m));
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_nodes() << ' ' << g.num_edges() << '\n';
  for (int eid = 0; eid < g.num_edges(); ++eid) {
    auto [u, v] = g.edge(eid);
    out << u << ' ' << v << '\n';
  }
}

Graph read_graph_file(const std::string& path) {
  auto in = open_in(path);
  return read_graph(in);
}

void write_graph_file(const std::string& path, const Graph& g) {
  auto out = open_out(path);
  write_graph(out, g);
}

void write_edge_set(std::ostream& out, const Graph& g, const EdgeSet& edges) {
  out << g.num_nodes() << ' ' << edges.size() << '\n';
  for (int eid = 0; eid < g.num_edges(); ++eid) {
    if (!edges.contains(eid)) continue;
    auto [u, v] = g.edge(eid);
    out << u << ' ' << v << '\n';
  }
}

void write_edge_set_file(const std::string& path, const Graph& g, const EdgeSet& edges) {
  auto out = open_out(path);
  write_edge_set(out, g, edges);
}

EdgeSet read_edge_set(std::istream& in, const Graph& g) {
  std::string line;
  if (!next_line(in, line)) throw std::runtime_error("subgraph file: empty");
  std::istringstream header(line);
  int n, m;
  if (!(header >> n >> m) || n != g.num_nodes() || m < 0)
    throw std::runtime_error("subgraph file: header does not match host graph");
  EdgeSet set = g.empty_edge_set();
  for (const auto& [u, v] : read_edge_lines(in, n, m)) {
    int eid = g.edge_index(u, v);
    if (eid < 0)
      throw std::runtime_error("subgraph file: edge (" + std::to_string(u) + "," +
                               std::to_string(v) + ") not in host graph");
    set.insert(eid);
  }
  return set;
}

EdgeSet read_edge_set_file(const std::string& path, const Graph& g) {
  auto in = open_in(path);
  return read_edge_set(in, g);
}

std::vector<std::pair<Node, Node>> read_pairs(std::istream& in) {
  std::vector<std::pair<Node, Node>> pairs;
  std::string line;
  while (next_line(in, line)) {
    std::istringstream ls(line);
    Node u, v;
    if (!(ls >> u >> v)) throw std::runtime_error("pairs file: bad line '" + line + "'");
    pairs.emplace_back(u, v);
  }
  return pairs;
}

void write_pairs(std::ostream& out, const std::vector<std::pair<Node, Node>>& pairs) {
  for (const auto& [u, v] : pairs) out << u << ' ' << v << '\n';
}

std::vector<std::pair<Node, Node>> read_pairs_file(const std::string& path) {
  auto in = open_in(path);
  return read_pairs(in);
}

void write_pairs_file(const std::string& path,
                      const std::vector<std::pair<Node, Node>>& pairs) {
  auto out = open_out(path);
  write_pairs(out, pairs);
}

}  // namespace pairspan
