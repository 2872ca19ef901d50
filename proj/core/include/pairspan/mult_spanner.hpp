#pragma once

#include "pairspan/graph.hpp"

namespace pairspan {

/// Greedy multiplicative (2k-1)-spanner: edges are scanned in lexicographic
/// order and kept iff the current spanner distance between the endpoints
/// exceeds 2k-1. The result has girth > 2k and hence O(n^{1+1/k}) edges.
EdgeSet greedy_mult_spanner(const Graph& g, int k);

/// greedy_mult_spanner with k = ceil(log2 n): multiplicative stretch
/// at most 2*ceil(log2 n) - 1 and O(n) edges.
EdgeSet log_stretch_spanner(const Graph& g);

}  // namespace pairspan
