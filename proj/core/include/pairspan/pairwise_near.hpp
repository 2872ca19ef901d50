#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pairspan/clustering.hpp"
#include "pairspan/spanner.hpp"

namespace pairspan {

/// Parameters for the (1+eps,4) pairwise spanner over an arbitrary pair set.
struct NearAdditiveParams {
  std::vector<std::pair<Node, Node>> pairs;
  double epsilon = 0.5;
  std::optional<double> beta;  // default from n^{2 beta} = sqrt(N) log2(n)/eps
};

double near_additive_default_beta(int n, int num_pairs, double epsilon);

/// Whether cluster pairs are counted unordered (the default used by the
/// construction and its budgets) or ordered (exactly twice the unordered
/// count; kept testable because both readings appear in the literature).
enum class ClusterPairMode { unordered_pairs, ordered_pairs };

/// Number of cluster pairs, both touching p, whose along-path distance
/// is strictly smaller than their set distance in `current`.
int value_cluster_pairs(const Graph& g, const Path& p, const Clustering& cl,
                        const EdgeSet& current,
                        ClusterPairMode mode = ClusterPairMode::unordered_pairs);

/// Clustering phase, one buying pass over the pairs' shortest paths with
/// rule cost <= (12 log2 n / eps) sqrt(value), then a multiplicative
/// log-stretch spanner is unioned in. The result satisfies
/// dist_H(s,t) <= (1+eps) dist_G(s,t) + 4 for every pair.
std::pair<Spanner, BuyLedger> build_pairwise_near(const Graph& g,
                                                  const NearAdditiveParams& params);

}  // namespace pairspan
