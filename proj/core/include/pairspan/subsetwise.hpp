#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pairspan/clustering.hpp"
#include "pairspan/spanner.hpp"

namespace pairspan {

/// Parameters for the (1,2) subsetwise spanner over S x S.
struct SubsetwiseParams {
  std::vector<Node> sources;        // S, need not be sorted or unique
  std::optional<double> beta;       // default: n^beta = sqrt(|S|)
};

/// beta solving n^beta = sqrt(s_size), clamped to [0,1].
double subsetwise_default_beta(int n, int s_size);

/// Number of pairs (x,C) with x an endpoint and C a cluster touching p such
/// that p brings x strictly closer to C than `current` does.
int value_subsetwise(const Graph& g, const Path& p,
                     std::pair<Node, Node> endpoints, const Clustering& cl,
                     const EdgeSet& current);

/// Clustering phase + one path-buying pass over all S x S shortest paths
/// (lexicographic pair order), buying a path iff cost <= 2 * value.
/// The result H satisfies dist_H(u,v) <= dist_G(u,v) + 2 for all u,v in S.
std::pair<Spanner, BuyLedger> build_subsetwise(const Graph& g,
                                               const SubsetwiseParams& params);

}  // namespace pairspan
