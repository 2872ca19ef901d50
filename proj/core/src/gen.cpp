#include "pairspan/gen.hpp"

#include <algorithm>
#include <numeric>

#include "pairspan/rng.hpp"

namespace pairspan {

std::string to_string(GraphModel m) {
  switch (m) {
    case GraphModel::gnp: return "gnp";
    case GraphModel::grid: return "grid";
    case GraphModel::tree: return "tree";
    case GraphModel::cycle: return "cycle";
  }
  return "?";
}

std::optional<GraphModel> graph_model_from_string(const std::string& name) {
  if (name == "gnp") return GraphModel::gnp;
  if (name == "grid") return GraphModel::grid;
  if (name == "tree") return GraphModel::tree;
  if (name == "cycle") return GraphModel::cycle;
  return std::nullopt;
}

std::string to_string(PairMode m) {
  switch (m) {
    case PairMode::random_pairs: return "random-pairs";
    case PairMode::subset_cross: return "subset-cross";
    case PairMode::sourcewise_cross: return "sourcewise-cross";
  }
  return "?";
}

std::optional<PairMode> pair_mode_from_string(const std::string& name) {
  if (name == "random-pairs") return PairMode::random_pairs;
  if (name == "subset-cross") return PairMode::subset_cross;
  if (name == "sourcewise-cross") return PairMode::sourcewise_cross;
  return std::nullopt;
}

Graph generate_graph(const GenSpec& spec) {
  switch (spec.model) {
    case GraphModel::gnp: {
      if (spec.n < 0) throw std::invalid_argument("gnp: negative n");
      if (!(spec.p >= 0.0 && spec.p <= 1.0))
        throw std::invalid_argument("gnp: p must be in [0,1]");
      SplitMix64 rng(spec.seed);
      std::vector<std::pair<Node, Node>> edges;
      for (Node u = 0; u < spec.n; ++u)
        for (Node v = u + 1; v < spec.n; ++v)
          if (rng.next_unit() < spec.p) edges.emplace_back(u, v);
      return Graph(spec.n, std::move(edges));
    }
    case GraphModel::grid: {
      if (spec.rows < 1 || spec.cols < 1)
        throw std::invalid_argument("grid: rows and cols must be >= 1");
      const int n = spec.rows * spec.cols;
      std::vector<std::pair<Node, Node>> edges;
      auto id = [&](int r, int c) { return r * spec.cols + c; };
      for (int r = 0; r < spec.rows; ++r) {
        for (int c = 0; c < spec.cols; ++c) {
          if (c + 1 < spec.cols) edges.emplace_back(id(r, c), id(r, c + 1));
          if (r + 1 < spec.rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
      }
      return Graph(n, std::move(edges));
    }
    case GraphModel::tree: {
      if (spec.n < 0) throw std::invalid_argument("tree: negative n");
      SplitMix64 rng(spec.seed);
      std::vector<std::pair<Node, Node>> edges;
      for (Node v = 1; v < spec.n; ++v)
        edges.emplace_back(static_cast<Node>(rng.next_below(v)), v);
      return Graph(spec.n, std::move(edges));
    }
    case GraphModel::cycle: {
      if (spec.n < 0) throw std::invalid_argument("cycle: negative n");
      std::vector<std::pair<Node, Node>> edges;
      if (spec.n == 2) edges.emplace_back(0, 1);
      if (spec.n >= 3) {
        for (Node v = 0; v + 1 < spec.n; ++v) edges.emplace_back(v, v + 1);
        edges.emplace_back(0, spec.n - 1);
      }
      return Graph(spec.n, std::move(edges));
    }
  }
  throw std::invalid_argument("generate_graph: unknown model");
}

std::vector<Node> sample_subset(int n, int count, std::uint64_t seed) {
  if (count < 0 || count > n)
    throw std::invalid_argument("sample_subset: count out of range");
  std::vector<Node> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  SplitMix64 rng(seed);
  for (int i = 0; i < count; ++i) {
    int j = i + static_cast<int>(rng.next_below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<std::pair<Node, Node>> generate_pairs(int n, const PairSpec& spec) {
  std::vector<std::pair<Node, Node>> pairs;
  switch (spec.mode) {
    case PairMode::random_pairs: {
      if (n < 2 && spec.count > 0)
        throw std::invalid_argument("random-pairs: need at least 2 nodes");
      SplitMix64 rng(spec.seed);
      for (int i = 0; i < spec.count; ++i) {
        Node u = static_cast<Node>(rng.next_below(n));
        Node v = u;
        while (v == u) v = static_cast<Node>(rng.next_below(n));
        pairs.emplace_back(u, v);
      }
      break;
    }
    case PairMode::subset_cross: {
      std::vector<Node> s = sample_subset(n, spec.count, spec.seed);
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) pairs.emplace_back(s[i], s[j]);
      break;
    }
    case PairMode::sourcewise_cross: {
      std::vector<Node> s = sample_subset(n, spec.count, spec.seed);
      for (Node u : s)
        for (Node v = 0; v < n; ++v)
          if (v != u) pairs.emplace_back(u, v);
      break;
    }
  }
  return pairs;
}

}  // namespace pairspan
