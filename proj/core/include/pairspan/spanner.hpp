#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pairspan/graph.hpp"

namespace pairspan {

enum class Construction {
  subsetwise,
  sourcewise,
  pairwise_near,
  pairwise_pure,
  mult,
  preserver,
};

std::string to_string(Construction c);
std::optional<Construction> construction_from_string(const std::string& name);

/// Edge subset of the host graph with per-phase provenance counters.
struct Spanner {
  EdgeSet edges;
  int clustering_edges = 0;
  int bought_edges = 0;
  int phase3_edges = 0;
};

/// One candidate path in a ladder: the path itself, its rung index j and
/// its cost (edges absent from the spanner under construction).
struct CandidatePath {
  Path path;
  int rung = 0;
  int cost = 0;
};

/// Per-rung cost shrink factor (3 n^{1-beta})^{1/k} shared by the ladder
/// constructions.
double ladder_gamma(int n, double beta, int k);

/// One evaluated pair in a path-buying run.
struct PathRecord {
  Node u = 0;
  Node v = 0;
  bool reachable = true;
  bool bought = false;
  int rung = 0;   // rung index at which the pair's path was bought
  int cost = 0;   // cost of the bought (or final rejected) path
  int value = 0;  // value at evaluation time
  int edges_added = 0;
};

/// Audit trail of one construction run: per-path records, running sums over
/// bought paths, and how often each (endpoint,cluster) or cluster-pair key
/// contributed to the value of a bought path.
struct BuyLedger {
  Construction kind = Construction::subsetwise;
  int n = 0;
  int set_size = 0;   // |S| where applicable
  int num_pairs = 0;  // pairs actually iterated
  int k = 0;
  double beta = 0.0;
  double gamma = 0.0;
  double epsilon = 0.0;

  std::vector<PathRecord> records;
  std::unordered_map<std::uint64_t, int> contributions;
  long long sum_cost_bought = 0;
  long long sum_value_bought = 0;
  int max_rung = 0;

  static std::uint64_t key(std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

  void note_contribution(std::uint32_t a, std::uint32_t b) {
    ++contributions[key(a, b)];
  }

  int max_contribution() const;
  /// Max total contribution per low-32-bit key (cluster id for the
  /// sourcewise ledger, where the high bits hold the source).
  int max_contribution_low32() const;
};

}  // namespace pairspan
