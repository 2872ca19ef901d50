#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pairspan/clustering.hpp"
#include "pairspan/spanner.hpp"

namespace pairspan {

/// Parameters for the (1,2k) sourcewise spanner over S x V.
struct SourcewiseParams {
  std::vector<Node> sources;
  int k = 1;                   // additive stretch is 2k
  std::optional<double> beta;  // default from n^beta = (n^{1/k}(2k+3)|S|)^{k/(2k+1)}
};

double sourcewise_default_beta(int n, int s_size, int k);

/// Number of clusters touching p that p brings strictly closer to `source`
/// than `current` does.
int value_sourcewise(const Graph& g, const Path& p, Node source,
                     const Clustering& cl, const EdgeSet& current);

/// One ladder step: replaces cp (whose buy test failed) by a path that is at
/// most 2 longer and whose cost shrinks to at most floor(cost/gamma), built
/// from a shortest path in `current` to a witness cluster, a 2-hop detour
/// through its center, and the cheap suffix of cp.
CandidatePath refine_sourcewise(const Graph& g, const CandidatePath& cp,
                                Node source, const Clustering& cl,
                                const ClusterGraph& cg, const EdgeSet& current,
                                double gamma);

/// Clustering phase + ladder path-buying over all pairs (u in S, v in V).
/// Exactly one rung is bought per reachable pair; the result satisfies
/// dist_H(u,v) <= dist_G(u,v) + 2k for all u in S, v in V.
std::pair<Spanner, BuyLedger> build_sourcewise(const Graph& g,
                                               const SourcewiseParams& params);

}  // namespace pairspan
