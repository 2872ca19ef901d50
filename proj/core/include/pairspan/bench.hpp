#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pairspan/gen.hpp"
#include "pairspan/spanner.hpp"
#include "pairspan/verify.hpp"

namespace pairspan {

/// A construction to run, with its parameters. `eps` stays a decimal string
/// end to end so the (1+eps) stretch check is exact.
struct ConstructionRequest {
  Construction kind = Construction::subsetwise;
  int k = 2;
  std::string eps = "0.5";
  std::optional<double> beta;  // nullopt = construction default
};

/// Thrown when a built spanner fails its stretch or size audit.
class VerificationFailure : public std::runtime_error {
 public:
  explicit VerificationFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Node set implied by a pair list: all endpoints (subsetwise) or all first
/// endpoints (sourcewise).
std::vector<Node> subset_from_pairs(std::span<const std::pair<Node, Node>> pairs);
std::vector<Node> sources_from_pairs(std::span<const std::pair<Node, Node>> pairs);

/// The stretch function each construction promises.
StretchSpec stretch_spec_for(const ConstructionRequest& req);

struct BuildOutcome {
  Spanner spanner;
  BuyLedger ledger;
  StretchSpec spec;
  StretchReport stretch;
  SizeReport sizes;

  bool verified() const { return stretch.pass && sizes.pass; }
  std::string failure_witness() const;
};

/// Builds the requested spanner over (g, pairs), then audits it with
/// verify_stretch and audit_sizes. Does not throw on a failed audit; the
/// outcome carries the reports.
BuildOutcome run_construction(const Graph& g,
                              std::span<const std::pair<Node, Node>> pairs,
                              const ConstructionRequest& req);

/// Union of one deterministic shortest path per reachable pair; preserves
/// all pair distances exactly.
EdgeSet preserver_baseline(const Graph& g,
                           std::span<const std::pair<Node, Node>> pairs);

struct BenchSpec {
  GenSpec graph;
  PairSpec pairs;
  std::vector<ConstructionRequest> constructions;
};

struct BenchRow {
  std::string construction;
  int n = 0;
  int m = 0;
  int n_or_s = 0;
  std::string k_or_eps;
  std::string beta;
  int edges_clustering = 0;
  int edges_bought = 0;
  int edges_phase3 = 0;
  int edges_total = 0;
  int baseline_edges = 0;
  bool stretch_pass = false;
  double worst_excess = 0.0;
  double wall_time_ms = 0.0;
};

std::string csv_header();
std::string to_csv(const BenchRow& row);

/// Runs every requested construction on one generated instance, one row per
/// construction in request order. Cells may run in parallel (worker count
/// capped by PAIRSPAN_THREADS); output order does not depend on scheduling.
/// Throws VerificationFailure if any cell's audits fail.
std::vector<BenchRow> run_benchmark(const BenchSpec& spec);

void write_csv(std::ostream& out, std::span<const BenchRow> rows);

}  // namespace pairspan
