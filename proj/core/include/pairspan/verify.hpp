#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pairspan/clustering.hpp"
#include "pairspan/spanner.hpp"

namespace pairspan {

/// Exact nonnegative rational, for stretch bounds that must not suffer
/// float-boundary false verdicts.
struct Rational {
  long long num = 0;
  long long den = 1;

  /// Parses "2", "0.25", "1.5" etc.
  static Rational from_decimal(const std::string& text);
  static Rational from_int(long long v) { return {v, 1}; }

  Rational normalized() const;
  Rational operator+(const Rational& o) const;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Stretch function f(d) = alpha * d + add.
struct StretchSpec {
  Rational alpha{1, 1};
  Rational add{0, 1};

  static StretchSpec additive(long long add);
  static StretchSpec multiplicative(long long alpha);
  /// alpha = 1 + eps with eps given as a decimal string, add = 4.
  static StretchSpec near_additive(const std::string& eps_decimal);

  /// d_h <= alpha * d_g + add, compared exactly.
  bool ok(int d_g, int d_h) const;
  double bound(int d_g) const;
};

struct StretchRow {
  Node u = 0;
  Node v = 0;
  int d_g = DistanceRow::kUnreachable;
  int d_h = DistanceRow::kUnreachable;
  double bound = 0.0;
  bool ok = true;
};

struct StretchReport {
  std::vector<StretchRow> rows;
  double worst_excess = 0.0;  // max over pairs of d_h - bound
  bool pass = true;

  std::string first_failure() const;
};

/// Audits dist_H <= f(dist_G) for every pair by independent BFS in g and in
/// (V,h). Pairs unreachable in g are vacuously ok; pairs reachable in g but
/// not in h fail.
StretchReport verify_stretch(const Graph& g, const EdgeSet& h,
                             std::span<const std::pair<Node, Node>> pairs,
                             const StretchSpec& spec);

struct SizeRow {
  std::string name;
  double observed = 0.0;
  double allowed = 0.0;
  bool ok = true;
};

struct SizeReport {
  std::vector<SizeRow> rows;
  bool pass = true;

  std::string first_failure() const;
};

/// Evaluates the explicit-constant budgets of the construction that
/// produced `ledger` (bought-edge totals and contribution caps) against the
/// observed counters.
SizeReport audit_sizes(const BuyLedger& ledger);

struct ClusterCoverageReport {
  int trials = 0;
  int checked = 0;  // trials that produced a usable path
  int violations = 0;
  bool pass = true;
  std::vector<std::string> witnesses;
};

/// Samples `trials` node pairs; for each shortest path with t edges absent
/// from cg, requires at least ceil(t/2) clusters touching the path.
ClusterCoverageReport audit_cluster_coverage(const Graph& g, const Clustering& cl,
                          const ClusterGraph& cg, int trials, std::uint64_t seed);

struct ClusteringAudit {
  bool ok = true;
  std::vector<std::string> violations;
  int cluster_count = 0;
  int cg_edges = 0;
  long long cg_edge_bound = 0;  // clusters*(threshold+1)^2 + n*threshold
};

/// Independent check of the clustering contract: disjointness, exact
/// cluster sizes, center adjacency, cluster count, the missing-edge and
/// cluster-diameter properties, and the explicit edge bound on cg.
ClusteringAudit audit_clustering(const Graph& g, const Clustering& cl,
                                 const ClusterGraph& cg);

}  // namespace pairspan
