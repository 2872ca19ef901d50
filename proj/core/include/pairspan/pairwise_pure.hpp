#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pairspan/clustering.hpp"
#include "pairspan/spanner.hpp"

namespace pairspan {

/// Parameters for the (1,4k) purely-additive pairwise spanner.
struct PureAdditiveParams {
  std::vector<std::pair<Node, Node>> pairs;
  int k = 1;                   // additive stretch is 4k
  std::optional<double> beta;  // default from n^beta = (6 n^{1/k} sqrt((4k+5)N))^{k/(2k+1)}
};

double pure_additive_default_beta(int n, int num_pairs, int k);

/// Over the sequence I of clustered positions of p, finds indices a <= b
/// whose clusters C1, C2 satisfy dist_p(C1,C2) >= dist_current(C1,C2),
/// maximizing b-a (ties: smallest a). (a,a) always qualifies. Requires at
/// least two clustered vertices on p.
std::pair<int, int> find_max_span_pair(const Graph& g, const Path& p,
                                       const Clustering& cl,
                                       const EdgeSet& current);

/// One ladder step: prefix A up to position a, bridge B through `current`
/// between the two witness clusters (extended via their centers), suffix C
/// from position b. At most 4 longer, cost shrinks to at most
/// floor(cost/gamma).
CandidatePath refine_pure(const Graph& g, const CandidatePath& cp,
                          std::pair<Node, Node> endpoints, const Clustering& cl,
                          const ClusterGraph& cg, const EdgeSet& current,
                          double gamma);

/// Clustering phase + ladder path-buying with rule
/// cost <= 6 gamma sqrt(value). The result satisfies
/// dist_H(s,t) <= dist_G(s,t) + 4k for every pair.
std::pair<Spanner, BuyLedger> build_pairwise_pure(const Graph& g,
                                                  const PureAdditiveParams& params);

}  // namespace pairspan
