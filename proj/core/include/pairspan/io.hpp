#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pairspan/graph.hpp"

namespace pairspan {

/// Text graph format: first payload line "n m", then m lines "u v" with
/// 0 <= u < v < n in ascending lexicographic order. Blank lines and lines
/// starting with '#' are ignored.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

/// Writes an edge subset of g in the same format (header "n m'").
void write_edge_set(std::ostream& out, const Graph& g, const EdgeSet& edges);
void write_edge_set_file(const std::string& path, const Graph& g, const EdgeSet& edges);

/// Reads a subgraph in graph format and returns it as an EdgeSet of g.
/// Every listed edge must exist in g.
EdgeSet read_edge_set(std::istream& in, const Graph& g);
EdgeSet read_edge_set_file(const std::string& path, const Graph& g);

/// Pairs format: lines "u v"; blank lines and '#' comments are ignored.
std::vector<std::pair<Node, Node>> read_pairs(std::istream& in);
void write_pairs(std::ostream& out, const std::vector<std::pair<Node, Node>>& pairs);

std::vector<std::pair<Node, Node>> read_pairs_file(const std::string& path);
void write_pairs_file(const std::string& path,
                      const std::vector<std::pair<Node, Node>>& pairs);

}  // namespace pairspan
