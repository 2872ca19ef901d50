#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pairspan/graph.hpp"

namespace pairspan {

enum class GraphModel { gnp, grid, tree, cycle };

std::string to_string(GraphModel m);
std::optional<GraphModel> graph_model_from_string(const std::string& name);

/// Deterministic instance description: the same spec always generates the
/// same graph, bit for bit.
struct GenSpec {
  GraphModel model = GraphModel::gnp;
  int n = 0;          // ignored for grid (rows*cols)
  double p = 0.0;     // gnp only
  int rows = 0;       // grid only
  int cols = 0;       // grid only
  std::uint64_t seed = 0;
};

Graph generate_graph(const GenSpec& spec);

enum class PairMode { random_pairs, subset_cross, sourcewise_cross };

std::string to_string(PairMode m);
std::optional<PairMode> pair_mode_from_string(const std::string& name);

/// Deterministic pair-set description. `count` is the number of pairs for
/// random_pairs and the size of the sampled node set S for the cross modes.
struct PairSpec {
  PairMode mode = PairMode::random_pairs;
  int count = 0;
  std::uint64_t seed = 0;
};

/// `count` distinct nodes sampled without replacement, ascending.
std::vector<Node> sample_subset(int n, int count, std::uint64_t seed);

std::vector<std::pair<Node, Node>> generate_pairs(int n, const PairSpec& spec);

}  // namespace pairspan
